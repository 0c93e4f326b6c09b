#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hk {

/// Exact unbounded integer. Every arithmetic quantity in the library
/// (squares, divisibilities, residues, discriminants) is one of these;
/// no fixed-width arithmetic is used on domain values.
using Int = mpz_class;

/// Thrown when a computation reaches a state the theory rules out
/// (e.g. a non-integral transformed wall parameter). Reaching one of
/// these is a bug, not a bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hk
