#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "hk/common.hpp"

namespace hk::oracle {

/// Bounds for the sweep-equivalence checks: closed-form census values
/// are compared against the brute-force scans for all mt <= mt_max,
/// n <= n_max, gamma <= gamma_max; search_bound caps the surrogate
/// lattice coordinates.
struct SweepRange {
    Int mt_max;
    Int n_max;
    Int gamma_max;
    long search_bound = 8;
};

/// Exhaustive scan of a in [0, 2*mt) for a^2 == 1 (mod 4*mt). The plain
/// serial loop is the reference; brute_units partitions the range
/// across OpenMP threads and returns the identical sorted list.
std::vector<Int> brute_units_serial(const Int& mt);
std::vector<Int> brute_units(const Int& mt);

/// Exhaustive scan of b^ in [0, gamma^2): residues b = b^ mod gamma
/// with gcd(b, gamma) = 1 and gamma^2 | b^^2*mt + n, sorted.
std::vector<Int> brute_residues(const Int& mt, const Int& n, const Int& gamma);

/// Number of distinct residues mod gamma taken by the discriminant
/// units of mt; equals 2^rho_tilde(gamma) whenever gamma | 2*mt.
Int brute_unit_image(const Int& mt, const Int& gamma);

/// Vector in the rank-5 surrogate lattice U + U + <-2*mt>, coordinates
/// in the basis e1, f1, e2, f2, g with (e_i, f_i) = 1 and g^2 = -2*mt.
using SurrogateVector = std::array<Int, 5>;

Int surrogate_square(const Int& mt, const SurrogateVector& v);
Int surrogate_pairing(const Int& mt, const SurrogateVector& u, const SurrogateVector& v);

/// gcd of the pairings with the basis: gcd(x1, x2, x3, x4, 2*mt*x5).
Int surrogate_divisibility(const Int& mt, const SurrogateVector& v);

bool surrogate_primitive(const SurrogateVector& v);

/// The k with v_* = k*delta_* read off the <-2*mt> coordinate,
/// normalized into [0, mt]. Requires v primitive.
Int surrogate_kstar(const Int& mt, const SurrogateVector& v);

/// First primitive h with h^2 = 2n and div(h) = gamma, coordinates
/// searched in the deterministic 0, 1, -1, 2, -2, ... order within
/// [-bound, bound]; nullopt if none in the box.
std::optional<SurrogateVector> find_polarization_vector(const Int& mt, const Int& n,
                                                        const Int& gamma, long bound);

/// All such h in scan order, up to max_count (0 = no cap). The box
/// bound breaks orbit equivalence, so a wall witness bounded for one h
/// need not be bounded for another; searches range over these.
std::vector<SurrogateVector> find_polarization_vectors(const Int& mt, const Int& n,
                                                       const Int& gamma, long bound,
                                                       std::size_t max_count);

struct WallKey {
    Int k;
    Int l;

    friend bool operator==(const WallKey&, const WallKey&) = default;
    friend bool operator<(const WallKey& a, const WallKey& b) {
        return a.k != b.k ? a.k < b.k : a.l < b.l;
    }
};

/// All (k, l) realized by primitive kappa orthogonal to h with
/// kappa^2 < 0 and coordinates in [-bound, bound], each with its first
/// witness in scan order. The serial scan is the reference; the
/// parallel one partitions the leading coordinate and merges
/// deterministically to the same map.
std::map<WallKey, SurrogateVector> orthogonal_wall_scan_serial(const Int& mt,
                                                               const SurrogateVector& h,
                                                               long bound);
std::map<WallKey, SurrogateVector> orthogonal_wall_scan(const Int& mt, const SurrogateVector& h,
                                                        long bound);

struct SurrogateWitness {
    SurrogateVector h;
    SurrogateVector kappa;

    friend bool operator==(const SurrogateWitness&, const SurrogateWitness&) = default;
};

/// Searches the surrogate lattice for a pair: a polarization vector h
/// of square 2n and divisibility gamma, and a primitive kappa
/// orthogonal to it with kappa^2 = 2l and kappa_* = +-k*delta_*.
/// Absence means "search exhausted within the bound", never proven
/// nonexistence.
std::optional<SurrogateWitness> surrogate_wall_search(const Int& mt, const Int& n,
                                                      const Int& gamma, const Int& k,
                                                      const Int& l, long bound);

}  // namespace hk::oracle
