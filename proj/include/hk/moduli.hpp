#pragma once

#include <vector>

#include "hk/lattice.hpp"

namespace hk::moduli {

/// The numerical data of a polarization: square h^2 = 2n and
/// divisibility gamma. Construct through polarization() so the
/// family-specific constraints are enforced.
struct PolarizationNumerics {
    Int n;
    Int gamma;

    friend bool operator==(const PolarizationNumerics&, const PolarizationNumerics&) = default;
};

/// Validates n >= 1, gamma >= 1 and, for K3m/Kumm, gamma | gcd(2*mt, 2n);
/// for OG6 gamma in {1,2}; for OG10 gamma in {1,3}. Violations throw.
PolarizationNumerics polarization(const lattice::DeformationType& dt, const Int& n,
                                  const Int& gamma);

/// Per-prime local data of the census at a prime p | gamma:
/// alpha = min(v_p(mt), v_p(n)), beta = v_p(gamma), the local existence
/// verdict, and the counts M_p (admissible residues of b mod p^beta)
/// and N_p (polarization types), meaningful when existence holds.
struct PrimeLocal {
    Int p;
    unsigned long v_mt = 0;
    unsigned long v_n = 0;
    unsigned long alpha = 0;
    unsigned long beta = 0;
    bool exists = false;
    Int m_p;
    Int n_p;

    friend bool operator==(const PrimeLocal&, const PrimeLocal&) = default;
};

/// K3m/Kumm only: the local data for every prime dividing gamma.
std::vector<PrimeLocal> local_census(const lattice::DeformationType& dt,
                                     const PolarizationNumerics& pn);

/// Existence of a polarization type of square 2n and divisibility gamma.
/// K3m/Kumm: for every p | gamma either beta <= alpha/2, or the
/// valuations agree and -n/mt is a square mod p^(2*beta-alpha).
/// OG6: gamma = 1, or gamma = 2 and n = 2,3 (mod 4).
/// OG10: gamma = 1, or gamma = 3 and n = 6 (mod 9).
bool exists_polarization(const lattice::DeformationType& dt, const PolarizationNumerics& pn);

/// Number of polarization types with the given square and divisibility:
/// 0 if nonexistent, else the product of the N_p (empty product for
/// gamma = 1); 1 for the OG families when existent.
Int count_polarization_types(const lattice::DeformationType& dt,
                             const PolarizationNumerics& pn);

/// Product of the M_p: the number of admissible residues b mod gamma.
/// Equals count_polarization_types * 2^rho_tilde(gamma).
Int count_admissible_residues(const lattice::DeformationType& dt,
                              const PolarizationNumerics& pn);

/// Number of connected components of the polarized moduli space:
/// 2^max(rho_tilde(gamma)-1, 0) for K3m/Kumm, 1 for OG6/OG10.
Int count_components(const lattice::DeformationType& dt, const Int& gamma);

/// Number of Otilde-orbits inside one polarization type: 2^rho_tilde(gamma).
Int count_otilde_orbits(const Int& gamma);

/// A connected component of the polarized moduli space, represented by
/// the residues b mod gamma it collects (closed under b -> -b) and the
/// induced values h_* = (2*mt/gamma)*b in Z/2mt.
struct ComponentClass {
    std::vector<Int> residues_b;
    std::vector<Int> h_star;
    int t_index = 0;

    friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// K3m/Kumm only. Enumerates the admissible residues b in [0, gamma)
/// (those coprime to gamma admitting a lift b^ in [0, gamma^2) with
/// gamma^2 | b^2*mt + n), groups them into components by b ~ -b, and
/// groups components into polarization types by the action of
/// discriminant_units(mt) on h_*. Empty iff no polarization exists.
/// Classes are ordered by their smallest residue.
std::vector<std::vector<ComponentClass>> enumerate_components(
    const lattice::DeformationType& dt, const PolarizationNumerics& pn);

}  // namespace hk::moduli
