#pragma once

#include <string>
#include <vector>

#include "hk/common.hpp"

namespace hk::lattice {

enum class Family { K3m, Kumm, OG6, OG10 };

/// One of the four known deformation types. m is meaningful only for
/// the K3m / Kumm families (and must be >= 2 there).
struct DeformationType {
    Family family = Family::K3m;
    Int m = 0;

    friend bool operator==(const DeformationType&, const DeformationType&) = default;
};

DeformationType k3m(const Int& m);
DeformationType kumm(const Int& m);
DeformationType og6();
DeformationType og10();

std::string family_name(Family f);

/// Display name such as "K3^[7]", "Kum_3", "OG6".
std::string display_name(const DeformationType& dt);

/// m - 1 for K3m, m + 1 for Kumm; rejects the OG families.
Int mtilde(const DeformationType& dt);

struct DiscriminantGroup {
    Int order;
    bool cyclic;
    std::string generator;  // "delta_*" for the cyclic K3m/Kumm groups
};

/// Order 2*mtilde and cyclic for K3m/Kumm (generated by delta_*),
/// (Z/2Z)^2 for OG6, Z/3Z for OG10.
DiscriminantGroup discriminant_group(const DeformationType& dt);

/// All residues a in [0, 2*mt) with a^2 == 1 (mod 4*mt), sorted.
/// This is the isometry group of the cyclic discriminant group of
/// order 2*mt acting as g -> a*g; its size is 2^rho(mt). Computed by
/// CRT from the factorization of mt (the brute-force reference lives
/// in the oracle module).
std::vector<Int> discriminant_units(const Int& mt);

/// Descriptive lattice / discriminant-group / monodromy-group strings
/// for the `hk info` command.
struct MonodromySummary {
    std::string family;
    std::string lattice;
    std::string discriminant_group;
    std::string monodromy;
};

MonodromySummary monodromy_summary(const DeformationType& dt);

}  // namespace hk::lattice
