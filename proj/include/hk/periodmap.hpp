#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hk/moduli.hpp"
#include "hk/walls.hpp"

namespace hk::periodmap {

/// A Heegner divisor guaranteed to be avoided by the period map: a wall
/// type orthogonal to h (gamma | k) together with the discriminant
/// |2*d^2*n*l / (gamma^2*mt)| of the canonical representative of its
/// transcendental lattice.
struct HeegnerClass {
    walls::WallType wall;
    Int disc;

    friend bool operator==(const HeegnerClass&, const HeegnerClass&) = default;
};

/// |2*d^2*n*l / (gamma^2*mt)| as an exact integer; equals
/// |2n*(4c*mt - k^2)| / gamma^2. Requires gamma | k; throws
/// internal_error if the exact rational is not integral (a saturation
/// anomaly, expected never to trigger).
Int heegner_discriminant(const lattice::DeformationType& dt,
                         const moduli::PolarizationNumerics& pn,
                         const walls::WallType& wall);

/// Every wall type with gamma | k paired with its discriminant, in
/// (k, c) order. This is the guaranteed-avoided list, not an exhaustive
/// list of all avoided irreducible Heegner divisors.
std::vector<HeegnerClass> avoided_heegner(const lattice::DeformationType& dt,
                                          const moduli::PolarizationNumerics& pn);

/// Image of a wall under a discriminant unit a: k' is a*k normalized
/// into [0, mt], c' = c + (k'^2 - k^2)/(4*mt). Both l and d are
/// preserved; c' is integral because a^2 == 1 (mod 4*mt).
struct WallCandidate {
    Int k;
    Int c;
    Int l;
    Int d;

    friend bool operator==(const WallCandidate&, const WallCandidate&) = default;
};

WallCandidate transform_wall(const lattice::DeformationType& dt, const walls::WallType& wall,
                             const Int& a);

/// Whether the transformed pair still satisfies the family's wall
/// condition, i.e. c >= lower bound (the upper bound holds because l is
/// preserved).
bool candidate_is_wall(const lattice::DeformationType& dt, const WallCandidate& cand);

/// Upper bound for the order of the deck group G of P_tau -> P_T:
/// |{units fixing h_*}| / |{a in {1,-1} fixing h_*}|, the order of
/// O+(Lambda,h)/Mon(Lambda,h). Exactness is only certified when a
/// broken wall in compare_images proves the action nontrivial.
Int deck_group_bound(const lattice::DeformationType& dt, const moduli::PolarizationNumerics& pn,
                     const moduli::ComponentClass& component);

enum class ComponentAction { Fix, Swap };
enum class Verdict { IdenticalImages, DifferentImages, NotGInvariant, Inconclusive };

std::string verdict_name(Verdict v);
std::string action_name(ComponentAction a);

/// A wall type orthogonal to h whose transform under a unit leaves the
/// wall range: c' drops below the family's lower bound.
struct BrokenWall {
    Int k;
    Int c;
    Int l;
    Int k_prime;
    Int c_prime;

    friend bool operator==(const BrokenWall&, const BrokenWall&) = default;
};

/// Comparison of period-map images under the identification induced by
/// one discriminant unit, for one polarization-type class. Verdicts are
/// claims about the enumerated wall data only: "identical" means
/// identical on enumerated walls (the avoided list is not exhaustive).
struct ImageComparisonReport {
    Int unit;
    int t_index = 0;
    ComponentAction action = ComponentAction::Fix;
    std::vector<BrokenWall> broken_walls;  // smallest (k, c) first, capped
    Int broken_total;                      // exact count, not capped
    Verdict verdict = Verdict::Inconclusive;
    Int deck_bound;

    friend bool operator==(const ImageComparisonReport&, const ImageComparisonReport&) = default;
};

/// One report per (polarization-type class, unit a) for the units
/// a != +-1; a single identical-images report per class when no such
/// unit exists. Swap action with broken walls yields different-images;
/// fix action with broken walls yields not-G-invariant; no broken walls
/// yields identical-images. At most max_witnesses broken walls are
/// listed per report (broken_total is exact).
std::vector<ImageComparisonReport> compare_images(const lattice::DeformationType& dt,
                                                  const moduli::PolarizationNumerics& pn,
                                                  std::size_t max_witnesses = 16);

}  // namespace hk::periodmap
