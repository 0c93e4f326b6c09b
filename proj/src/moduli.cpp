#include "hk/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hk/intarith.hpp"

namespace hk::moduli {

using lattice::DeformationType;
using lattice::Family;
using namespace intarith;

namespace {

bool is_og(const DeformationType& dt) {
    return dt.family == Family::OG6 || dt.family == Family::OG10;
}

void require_hilb_or_kum(const DeformationType& dt, const char* who) {
    if (is_og(dt)) throw std::invalid_argument(std::string(who) + ": K3m/Kumm only");
}

}  // namespace

PolarizationNumerics polarization(const DeformationType& dt, const Int& n, const Int& gamma) {
    if (n < 1) throw std::invalid_argument("polarization: n must be positive");
    if (gamma < 1) throw std::invalid_argument("polarization: gamma must be positive");
    switch (dt.family) {
        case Family::K3m:
        case Family::Kumm: {
            const Int mt = lattice::mtilde(dt);
            if (gcd(2 * mt, 2 * n) % gamma != 0)
                throw std::invalid_argument(
                    "polarization: gamma must divide gcd(2*mtilde, 2n)");
            break;
        }
        case Family::OG6:
            if (gamma != 1 && gamma != 2)
                throw std::invalid_argument("polarization: OG6 admits only gamma in {1, 2}");
            break;
        case Family::OG10:
            if (gamma != 1 && gamma != 3)
                throw std::invalid_argument("polarization: OG10 admits only gamma in {1, 3}");
            break;
    }
    return {n, gamma};
}

std::vector<PrimeLocal> local_census(const DeformationType& dt, const PolarizationNumerics& pn) {
    require_hilb_or_kum(dt, "local_census");
    polarization(dt, pn.n, pn.gamma);  // beta <= alpha + [p == 2] relies on this
    const Int mt = lattice::mtilde(dt);
    std::vector<PrimeLocal> out;
    for (const auto& [p, e] : factorize(pn.gamma)) {
        PrimeLocal loc;
        loc.p = p;
        loc.beta = e;
        loc.v_mt = vp(p, mt);
        loc.v_n = vp(p, pn.n);
        loc.alpha = std::min(loc.v_mt, loc.v_n);
        const unsigned long alpha = loc.alpha, beta = loc.beta;

        if (loc.v_mt != loc.v_n) {
            loc.exists = 2 * beta <= alpha;
        } else if (2 * beta <= alpha) {
            loc.exists = true;
        } else {
            // -n/mt as a unit mod p^(2beta-alpha), on the prime-to-p parts
            const unsigned long j = 2 * beta - alpha;
            const Int pj = pow_ui(p, j);
            const Int mt_unit = mt / pow_ui(p, alpha);
            const Int n_unit = pn.n / pow_ui(p, alpha);
            const Int t = mod_floor(-n_unit * mod_inverse(mt_unit, pj), pj);
            loc.exists = is_square_mod(t, p, j);
        }

        // Residue and type counts from the census; meaningful when the
        // local condition holds.
        if (p == 2) {
            if (2 * beta <= alpha + 2) {
                loc.m_p = pow_ui(2, beta - 1);
                loc.n_p = beta == 1 ? Int(1) : pow_ui(2, beta - 2);
            } else {
                loc.m_p = pow_ui(2, alpha + 2 - beta);
                loc.n_p = pow_ui(2, alpha + 1 - beta);
            }
        } else {
            if (2 * beta <= alpha) {
                loc.m_p = (p - 1) * pow_ui(p, beta - 1);
                loc.n_p = loc.m_p / 2;
            } else {
                loc.n_p = pow_ui(p, alpha - beta);
                loc.m_p = 2 * loc.n_p;
            }
        }
        out.push_back(std::move(loc));
    }
    return out;
}

bool exists_polarization(const DeformationType& dt, const PolarizationNumerics& pn) {
    polarization(dt, pn.n, pn.gamma);  // revalidate the family constraints
    switch (dt.family) {
        case Family::K3m:
        case Family::Kumm: {
            for (const auto& loc : local_census(dt, pn))
                if (!loc.exists) return false;
            return true;
        }
        case Family::OG6: {
            if (pn.gamma == 1) return true;
            const Int r = mod_floor(pn.n, 4);
            return r == 2 || r == 3;
        }
        case Family::OG10: {
            if (pn.gamma == 1) return true;
            return mod_floor(pn.n, 9) == 6;
        }
    }
    throw std::invalid_argument("exists_polarization: unknown family");
}

Int count_polarization_types(const DeformationType& dt, const PolarizationNumerics& pn) {
    if (!exists_polarization(dt, pn)) return 0;
    if (is_og(dt)) return 1;
    Int total = 1;
    for (const auto& loc : local_census(dt, pn)) total *= loc.n_p;
    return total;
}

Int count_admissible_residues(const DeformationType& dt, const PolarizationNumerics& pn) {
    if (!exists_polarization(dt, pn)) return 0;
    if (is_og(dt)) throw std::invalid_argument("count_admissible_residues: K3m/Kumm only");
    Int total = 1;
    for (const auto& loc : local_census(dt, pn)) total *= loc.m_p;
    return total;
}

Int count_components(const DeformationType& dt, const Int& gamma) {
    if (gamma < 1) throw std::invalid_argument("count_components: gamma must be positive");
    if (is_og(dt)) return 1;
    if ((2 * lattice::mtilde(dt)) % gamma != 0)
        throw std::invalid_argument("count_components: gamma must divide 2*mtilde");
    const unsigned long r = rho_tilde(gamma);
    return r <= 1 ? Int(1) : pow_ui(2, r - 1);
}

Int count_otilde_orbits(const Int& gamma) {
    if (gamma < 1) throw std::invalid_argument("count_otilde_orbits: gamma must be positive");
    return pow_ui(2, rho_tilde(gamma));
}

std::vector<std::vector<ComponentClass>> enumerate_components(const DeformationType& dt,
                                                              const PolarizationNumerics& pn) {
    require_hilb_or_kum(dt, "enumerate_components");
    polarization(dt, pn.n, pn.gamma);
    const Int mt = lattice::mtilde(dt);
    const Int gamma = pn.gamma;
    const Int gamma2 = gamma * gamma;

    // Step 1: admissible residues b mod gamma, via the lift search over
    // [0, gamma^2). gamma^2 is the exact modulus of the census congruence.
    std::set<Int> admissible;
    for (Int lift = 0; lift < gamma2; ++lift) {
        if ((lift * lift * mt + pn.n) % gamma2 != 0) continue;
        Int b = mod_floor(lift, gamma);
        if (gcd(b, gamma) == 1) admissible.insert(b);
    }

    // Step 2: group by b ~ -b (one connected component each). For Kumm
    // the identification on h_* is also by +-1, so the grouping agrees.
    std::map<Int, std::vector<Int>> orbits;  // min residue -> members
    for (const Int& b : admissible) {
        Int nb = mod_floor(-b, gamma);
        Int rep = std::min(b, nb);
        auto& o = orbits[rep];
        if (o.empty()) {
            o.push_back(rep);
            if (nb != b) o.push_back(std::max(b, nb));
        }
    }

    // Step 3: group components into polarization types by the action of
    // the discriminant units on h_* = (2*mt/gamma)*b, i.e. b -> a*b mod
    // gamma. The unit action preserves admissibility.
    std::vector<Int> units_mod_gamma;
    for (const Int& a : lattice::discriminant_units(mt))
        units_mod_gamma.push_back(mod_floor(a, gamma));

    std::map<Int, std::vector<Int>> t_classes;  // min orbit rep -> orbit reps
    std::set<Int> seen;
    for (const auto& [rep, members] : orbits) {
        if (seen.count(rep)) continue;
        std::set<Int> cls;
        for (const Int& b : members)
            for (const Int& a : units_mod_gamma) {
                Int ab = mod_floor(a * b, gamma);
                cls.insert(std::min(ab, mod_floor(-ab, gamma)));
            }
        std::vector<Int> reps(cls.begin(), cls.end());
        for (const Int& r : reps) seen.insert(r);
        t_classes[reps.front()] = std::move(reps);
    }

    std::vector<std::vector<ComponentClass>> out;
    const Int hstar_scale = 2 * mt / gamma;
    int t_index = 0;
    for (const auto& [rep, reps] : t_classes) {
        std::vector<ComponentClass> cls;
        for (const Int& r : reps) {
            ComponentClass comp;
            comp.t_index = t_index;
            comp.residues_b = orbits.at(r);
            for (const Int& b : comp.residues_b)
                comp.h_star.push_back(mod_floor(hstar_scale * b, 2 * mt));
            cls.push_back(std::move(comp));
        }
        out.push_back(std::move(cls));
        ++t_index;
    }
    return out;
}

}  // namespace hk::moduli
