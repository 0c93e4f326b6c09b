#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hk/lattice.hpp"

namespace hk::walls {

/// Numerical type of a wall class kappa: kappa^2 = 2l, kappa_* = k*delta_*
/// with k normalized into [0, mt], d = gcd(2*mt, k) (so gcd(2*mt, 0) = 2*mt),
/// div(kappa) = 2*mt/d, and l = c*(2*mt/d)^2 - mt*(k/d)^2 with l < 0.
struct WallType {
    Int k;
    Int c;
    Int l;
    Int d;
    Int div_kappa;

    friend bool operator==(const WallType&, const WallType&) = default;
};

/// The unique integer c with l = c*(2*mt/d)^2 - mt*(k/d)^2, i.e.
/// (l*d^2 + mt*k^2) / (2*mt)^2, or nullopt when that rational is not an
/// integer (no primitive class with invariants (2l, k*delta_*) exists).
std::optional<Int> solve_c(const Int& mt, const Int& k, const Int& l);

/// l = c*(2*mt/d)^2 - mt*(k/d)^2. Round-trips with solve_c.
Int l_from(const Int& mt, const Int& k, const Int& c);

/// True iff the unique c satisfies c >= -a, in which case a companion
/// vector s with s^2 = 2c and (s, v) = -k exists in the saturation of
/// <kappa, v>. Throws when there is no integral c.
bool companion_exists(const Int& mt, const Int& k, const Int& l, const Int& a);

/// Lower bound for c: -1 for K3m, 0 for Kumm. Rejects the OG families.
Int wall_c_lower_bound(const lattice::DeformationType& dt);

/// True iff (k, l) is a wall type for the family: c integral with
/// lower_bound <= c and 4*mt*c < k^2 (exact rational comparison of
/// c < k^2/(4*mt)). Rejects the OG families (use og_wall_list).
bool is_wall_type(const lattice::DeformationType& dt, const Int& k, const Int& l);

/// Wall type from (k, c), validated against the family's range.
WallType make_wall(const lattice::DeformationType& dt, const Int& k, const Int& c);

/// All wall types: k from 0 (K3m) or 1 (Kumm) to mt, c from the lower
/// bound to ceil(k^2/(4*mt)) - 1, sorted by (k, c).
std::vector<WallType> enumerate_wall_types(const lattice::DeformationType& dt);

/// Visits the wall types with gamma | k in (k, c) order without
/// materializing the full list; k steps through multiples of gamma.
void for_each_orthogonal_wall(const lattice::DeformationType& dt, const Int& gamma,
                              const std::function<void(const WallType&)>& fn);

/// A wall class with kappa_* = k*delta_* admits a representative
/// orthogonal to a polarization of divisibility gamma iff gamma | k.
bool wall_orthogonal_to(const lattice::DeformationType& dt, const Int& gamma, const Int& k);

/// Fixed wall-class lists for the OG families: square plus an optional
/// divisibility constraint (no constraint = any divisibility).
struct OgWallEntry {
    Int square;
    std::optional<Int> required_div;

    friend bool operator==(const OgWallEntry&, const OgWallEntry&) = default;
};

/// OG6: kappa^2 = -2, or kappa^2 = -4 with div 2.
/// OG10: kappa^2 in {-2, -4}, or kappa^2 in {-2, ..., -24} (even) with div 3.
/// Rejects K3m/Kumm (use enumerate_wall_types).
std::vector<OgWallEntry> og_wall_list(const lattice::DeformationType& dt);

}  // namespace hk::walls
