#include "hk/lattice.hpp"

#include <algorithm>

#include "hk/intarith.hpp"

namespace hk::lattice {

using intarith::factorize;
using intarith::mod_floor;
using intarith::mod_inverse;
using intarith::pow_ui;

DeformationType k3m(const Int& m) {
    // m = 1 would be a K3 surface (mtilde = 0); the census formulas
    // require m >= 2.
    if (m < 2) throw std::invalid_argument("k3m: requires m >= 2");
    return {Family::K3m, m};
}

DeformationType kumm(const Int& m) {
    if (m < 2) throw std::invalid_argument("kumm: requires m >= 2");
    return {Family::Kumm, m};
}

DeformationType og6() {
    return {Family::OG6, 0};
}

DeformationType og10() {
    return {Family::OG10, 0};
}

std::string family_name(Family f) {
    switch (f) {
        case Family::K3m: return "k3m";
        case Family::Kumm: return "kumm";
        case Family::OG6: return "og6";
        case Family::OG10: return "og10";
    }
    throw std::invalid_argument("family_name: unknown family");
}

std::string display_name(const DeformationType& dt) {
    switch (dt.family) {
        case Family::K3m: return "K3^[" + dt.m.get_str() + "]";
        case Family::Kumm: return "Kum_" + dt.m.get_str();
        case Family::OG6: return "OG6";
        case Family::OG10: return "OG10";
    }
    throw std::invalid_argument("display_name: unknown family");
}

Int mtilde(const DeformationType& dt) {
    switch (dt.family) {
        case Family::K3m: return dt.m - 1;
        case Family::Kumm: return dt.m + 1;
        default: throw std::invalid_argument("mtilde: undefined for this family");
    }
}

DiscriminantGroup discriminant_group(const DeformationType& dt) {
    switch (dt.family) {
        case Family::K3m:
        case Family::Kumm: return {2 * mtilde(dt), true, "delta_*"};
        case Family::OG6: return {4, false, ""};
        case Family::OG10: return {3, true, ""};
    }
    throw std::invalid_argument("discriminant_group: unknown family");
}

std::vector<Int> discriminant_units(const Int& mt) {
    if (mt < 1) throw std::invalid_argument("discriminant_units: mt must be positive");
    // a^2 == 1 (mod 4*mt) splits by CRT over Z/2mt: a == +-1 at each
    // odd prime power, a == +-1 mod 2^(v2(mt)+1), and a == 1 mod 2 when
    // mt is odd.
    struct Component {
        Int modulus;
        std::vector<Int> residues;
    };
    std::vector<Component> comps;
    for (const auto& [p, e] : factorize(mt)) {
        if (p == 2) {
            Int q = pow_ui(2, e + 1);
            comps.push_back({q, {Int(1), q - 1}});
        } else {
            Int q = pow_ui(p, e);
            comps.push_back({q, {Int(1), q - 1}});
        }
    }
    if (mt % 2 != 0) comps.push_back({2, {Int(1)}});

    std::vector<Int> out{0};
    Int modulus = 1;
    for (const auto& comp : comps) {
        std::vector<Int> next;
        next.reserve(out.size() * comp.residues.size());
        for (const Int& x : out) {
            for (const Int& r : comp.residues) {
                // x mod modulus, r mod comp.modulus -> lift mod product
                Int t = mod_floor((r - x) * mod_inverse(modulus, comp.modulus), comp.modulus);
                next.push_back(x + modulus * t);
            }
        }
        modulus *= comp.modulus;
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MonodromySummary monodromy_summary(const DeformationType& dt) {
    MonodromySummary s;
    s.family = display_name(dt);
    switch (dt.family) {
        case Family::K3m: {
            Int order = 2 * dt.m - 2;
            s.lattice = "U^3 + E8(-1)^2 + <-" + order.get_str() + ">";
            s.discriminant_group = "Z/" + order.get_str() + "Z";
            s.monodromy = "Ô⁺(Λ)";
            break;
        }
        case Family::Kumm: {
            Int order = 2 * dt.m + 2;
            s.lattice = "U^3 + <-" + order.get_str() + ">";
            s.discriminant_group = "Z/" + order.get_str() + "Z";
            s.monodromy = "{g ∈ Ô⁺(Λ) | χ(g)·det(g) = 1}";
            break;
        }
        case Family::OG6:
            s.lattice = "U^3 + <-2>^2";
            s.discriminant_group = "(Z/2Z)^2";
            s.monodromy = "O⁺(Λ)";
            break;
        case Family::OG10:
            s.lattice = "U^3 + E8(-1)^2 + [-6 3; 3 -2]";
            s.discriminant_group = "Z/3Z";
            s.monodromy = "O⁺(Λ)";
            break;
    }
    return s;
}

}  // namespace hk::lattice
