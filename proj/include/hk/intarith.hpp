#pragma once

#include <vector>

#include "hk/common.hpp"

namespace hk::intarith {

struct PrimePower {
    Int p;
    unsigned long e = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, pairs (p, e) sorted by p ascending. The empty
/// list is the factorization of 1.
using Factorization = std::vector<PrimePower>;

/// Deterministic trial division up to sqrt(n). Rejects n <= 0.
Factorization factorize(const Int& n);

/// p-adic valuation v_p(n): largest e with p^e | n. Rejects non-prime p
/// and n <= 0.
unsigned long vp(const Int& p, const Int& n);

/// Number of distinct prime divisors of n.
unsigned long rho(const Int& n);

/// rho(n) for odd n, rho(n/2) for even n.
unsigned long rho_tilde(const Int& n);

/// True iff x^2 == t (mod p^e) has a solution. Dispatches to an
/// exhaustive search for small moduli and to the valuation/unit
/// criterion (Hensel lifting) above the threshold; the two paths agree
/// on the overlap and both are exposed for testing.
bool is_square_mod(const Int& t, const Int& p, unsigned long e);
bool is_square_mod_search(const Int& t, const Int& p, unsigned long e);
bool is_square_mod_lift(const Int& t, const Int& p, unsigned long e);

bool is_prime(const Int& p);

Int gcd(const Int& a, const Int& b);

/// Representative of a mod m in [0, m). Requires m > 0.
Int mod_floor(const Int& a, const Int& m);

Int pow_ui(const Int& base, unsigned long e);

/// Inverse of a mod m; rejects non-invertible input.
Int mod_inverse(const Int& a, const Int& m);

}  // namespace hk::intarith
