#include "hk/walls.hpp"

#include "hk/intarith.hpp"

namespace hk::walls {

using lattice::DeformationType;
using lattice::Family;
using namespace intarith;

namespace {

void require_hilb_or_kum(const DeformationType& dt, const char* who) {
    if (dt.family == Family::OG6 || dt.family == Family::OG10)
        throw std::invalid_argument(std::string(who) + ": use og_wall_list");
}

Int wall_d(const Int& mt, const Int& k) {
    // gcd(2*mt, 0) = 2*mt, so k = 0 gets div(kappa) = 1 and l = c.
    return gcd(2 * mt, k);
}

// Largest admissible c for a given k: c < k^2/(4*mt) as an exact
// rational comparison, i.e. c <= ceil(k^2/(4*mt)) - 1.
Int c_upper(const Int& mt, const Int& k) {
    Int q;
    Int num = k * k;
    Int den = 4 * mt;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q - 1;
}

}  // namespace

std::optional<Int> solve_c(const Int& mt, const Int& k, const Int& l) {
    if (mt < 1) throw std::invalid_argument("solve_c: mt must be positive");
    if (k < 0 || k > mt) throw std::invalid_argument("solve_c: k must lie in [0, mt]");
    const Int d = wall_d(mt, k);
    const Int num = l * d * d + mt * k * k;
    const Int den = 4 * mt * mt;
    if (num % den != 0) return std::nullopt;
    return num / den;
}

Int l_from(const Int& mt, const Int& k, const Int& c) {
    if (mt < 1) throw std::invalid_argument("l_from: mt must be positive");
    if (k < 0 || k > mt) throw std::invalid_argument("l_from: k must lie in [0, mt]");
    const Int d = wall_d(mt, k);
    const Int w = 2 * mt / d;
    const Int kd = k / d;
    return c * w * w - mt * kd * kd;
}

bool companion_exists(const Int& mt, const Int& k, const Int& l, const Int& a) {
    if (a < 0) throw std::invalid_argument("companion_exists: a must be non-negative");
    auto c = solve_c(mt, k, l);
    if (!c) throw std::invalid_argument("companion_exists: no integral c");
    return *c >= -a;
}

Int wall_c_lower_bound(const DeformationType& dt) {
    require_hilb_or_kum(dt, "wall_c_lower_bound");
    return dt.family == Family::K3m ? Int(-1) : Int(0);
}

bool is_wall_type(const DeformationType& dt, const Int& k, const Int& l) {
    require_hilb_or_kum(dt, "is_wall_type");
    const Int mt = lattice::mtilde(dt);
    auto c = solve_c(mt, k, l);
    if (!c) return false;
    // c < k^2/(4*mt) exactly, equivalent to l < 0.
    return *c >= wall_c_lower_bound(dt) && 4 * mt * *c < k * k;
}

WallType make_wall(const DeformationType& dt, const Int& k, const Int& c) {
    require_hilb_or_kum(dt, "make_wall");
    const Int mt = lattice::mtilde(dt);
    if (k < 0 || k > mt) throw std::invalid_argument("make_wall: k must lie in [0, mt]");
    if (c < wall_c_lower_bound(dt) || c > c_upper(mt, k))
        throw std::invalid_argument("make_wall: c out of range for this family");
    const Int d = wall_d(mt, k);
    return {k, c, l_from(mt, k, c), d, 2 * mt / d};
}

std::vector<WallType> enumerate_wall_types(const DeformationType& dt) {
    std::vector<WallType> out;
    for_each_orthogonal_wall(dt, 1, [&](const WallType& w) { out.push_back(w); });
    return out;
}

void for_each_orthogonal_wall(const DeformationType& dt, const Int& gamma,
                              const std::function<void(const WallType&)>& fn) {
    require_hilb_or_kum(dt, "for_each_orthogonal_wall");
    if (gamma < 1) throw std::invalid_argument("for_each_orthogonal_wall: gamma >= 1");
    const Int mt = lattice::mtilde(dt);
    const Int lower = wall_c_lower_bound(dt);
    Int k = dt.family == Family::Kumm ? gamma : Int(0);
    for (; k <= mt; k += gamma) {
        const Int d = wall_d(mt, k);
        const Int div = 2 * mt / d;
        const Int hi = c_upper(mt, k);
        for (Int c = lower; c <= hi; ++c) fn({k, c, l_from(mt, k, c), d, div});
    }
}

bool wall_orthogonal_to(const DeformationType& dt, const Int& gamma, const Int& k) {
    require_hilb_or_kum(dt, "wall_orthogonal_to");
    if (gamma < 1) throw std::invalid_argument("wall_orthogonal_to: gamma >= 1");
    return mod_floor(k, gamma) == 0;
}

std::vector<OgWallEntry> og_wall_list(const DeformationType& dt) {
    switch (dt.family) {
        case Family::OG6: return {{-2, std::nullopt}, {-4, 2}};
        case Family::OG10: {
            std::vector<OgWallEntry> out{{-2, std::nullopt}, {-4, std::nullopt}};
            for (Int s = -2; s >= -24; s -= 2) out.push_back({s, 3});
            return out;
        }
        default: throw std::invalid_argument("og_wall_list: use enumerate_wall_types");
    }
}

}  // namespace hk::walls
