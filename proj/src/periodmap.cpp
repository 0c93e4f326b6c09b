#include "hk/periodmap.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hk/intarith.hpp"

namespace hk::periodmap {

using lattice::DeformationType;
using lattice::Family;
using moduli::PolarizationNumerics;
using walls::WallType;
using namespace intarith;

namespace {

void require_hilb_or_kum(const DeformationType& dt, const char* who) {
    if (dt.family == Family::OG6 || dt.family == Family::OG10)
        throw std::invalid_argument(std::string(who) + ": K3m/Kumm only");
}

Int normalize_kstar(const Int& mt, const Int& raw) {
    Int r = mod_floor(raw, 2 * mt);
    return std::min(r, Int(2 * mt - r));
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::IdenticalImages: return "identical-images";
        case Verdict::DifferentImages: return "different-images";
        case Verdict::NotGInvariant: return "not-G-invariant";
        case Verdict::Inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("verdict_name: unknown verdict");
}

std::string action_name(ComponentAction a) {
    return a == ComponentAction::Fix ? "fix" : "swap";
}

Int heegner_discriminant(const DeformationType& dt, const PolarizationNumerics& pn,
                         const WallType& wall) {
    require_hilb_or_kum(dt, "heegner_discriminant");
    if (!walls::wall_orthogonal_to(dt, pn.gamma, wall.k))
        throw std::invalid_argument("heegner_discriminant: wall not orthogonal to h");
    const Int mt = lattice::mtilde(dt);
    const Int num = abs(2 * wall.d * wall.d * pn.n * wall.l);
    const Int den = pn.gamma * pn.gamma * mt;
    // d^2*l/mt = 4c*mt - k^2 is integral and gamma | d, so this should
    // never trigger; it flags a saturation anomaly if it ever does.
    if (num % den != 0) throw internal_error("heegner_discriminant: non-integral discriminant");
    return num / den;
}

std::vector<HeegnerClass> avoided_heegner(const DeformationType& dt,
                                          const PolarizationNumerics& pn) {
    require_hilb_or_kum(dt, "avoided_heegner");
    moduli::polarization(dt, pn.n, pn.gamma);
    std::vector<HeegnerClass> out;
    walls::for_each_orthogonal_wall(dt, pn.gamma, [&](const WallType& w) {
        out.push_back({w, heegner_discriminant(dt, pn, w)});
    });
    return out;
}

WallCandidate transform_wall(const DeformationType& dt, const WallType& wall, const Int& a) {
    require_hilb_or_kum(dt, "transform_wall");
    const Int mt = lattice::mtilde(dt);
    const Int kp = normalize_kstar(mt, a * wall.k);
    const Int num = kp * kp - wall.k * wall.k;
    // a^2 == 1 (mod 4*mt) makes k'^2 == k^2 (mod 4*mt); anything else
    // is a bug, not a domain condition.
    if (num % (4 * mt) != 0) throw internal_error("transform_wall: non-integral c'");
    if (gcd(2 * mt, kp) != wall.d) throw internal_error("transform_wall: d not preserved");
    return {kp, wall.c + num / (4 * mt), wall.l, wall.d};
}

bool candidate_is_wall(const DeformationType& dt, const WallCandidate& cand) {
    return cand.c >= walls::wall_c_lower_bound(dt);
}

Int deck_group_bound(const DeformationType& dt, const PolarizationNumerics& pn,
                     const moduli::ComponentClass& component) {
    require_hilb_or_kum(dt, "deck_group_bound");
    moduli::polarization(dt, pn.n, pn.gamma);
    if (component.h_star.empty())
        throw std::invalid_argument("deck_group_bound: empty component");
    const Int mt = lattice::mtilde(dt);
    const Int h = component.h_star.front();

    Int stab = 0;
    for (const Int& a : lattice::discriminant_units(mt))
        if (mod_floor(a * h, 2 * mt) == h) ++stab;

    std::set<Int> signs{Int(1), mod_floor(Int(-1), 2 * mt)};
    Int fixed_signs = 0;
    for (const Int& a : signs)
        if (mod_floor(a * h, 2 * mt) == h) ++fixed_signs;

    return stab / fixed_signs;
}

namespace {

// Broken walls of one unit: walls with gamma | k whose transform falls
// below the family's c lower bound. For a fixed k the shift
// (k'^2 - k^2)/(4*mt) is the same for every c, so each k contributes a
// contiguous range of broken c values; only witnesses are materialized.
struct BrokenScan {
    std::vector<BrokenWall> witnesses;
    Int total = 0;
};

BrokenScan scan_broken_walls(const DeformationType& dt, const Int& gamma, const Int& a,
                             std::size_t max_witnesses) {
    const Int mt = lattice::mtilde(dt);
    const Int lower = walls::wall_c_lower_bound(dt);
    const Int k0 = dt.family == Family::Kumm ? gamma : Int(0);
    if (k0 > mt) return {};
    const Int steps = (mt - k0) / gamma + 1;
    if (!steps.fits_slong_p()) throw std::invalid_argument("scan_broken_walls: range too large");
    const long n_steps = steps.get_si();

    const int max_threads =
#ifdef _OPENMP
        omp_get_max_threads();
#else
        1;
#endif
    std::vector<BrokenScan> parts(max_threads);
    bool invariant_breach = false;  // exceptions must not cross the omp region

#pragma omp parallel num_threads(max_threads)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nth = omp_get_num_threads();
#else
        const int tid = 0;
        const int nth = 1;
#endif
        const long lo = n_steps * tid / nth;
        const long hi = n_steps * (tid + 1) / nth;
        const Int four_mt = 4 * mt;
        BrokenScan part;
        Int k = k0 + gamma * lo;
        for (long j = lo; j < hi; ++j, k += gamma) {
            const Int kp = normalize_kstar(mt, a * k);
            const Int shift_num = kp * kp - k * k;
            if (shift_num % four_mt != 0) {
#pragma omp atomic write
                invariant_breach = true;
                break;
            }
            const Int shift = shift_num / four_mt;
            // c broken iff c + shift < lower, for c in [lower, c_max(k)]
            Int c_max;
            const Int k_sq = k * k;
            mpz_cdiv_q(c_max.get_mpz_t(), k_sq.get_mpz_t(), four_mt.get_mpz_t());
            c_max -= 1;
            const Int broken_hi = std::min(c_max, Int(lower - shift - 1));
            if (broken_hi < lower) continue;
            part.total += broken_hi - lower + 1;
            for (Int c = lower; c <= broken_hi && part.witnesses.size() < max_witnesses; ++c)
                part.witnesses.push_back({k, c, walls::l_from(mt, k, c), kp, c + shift});
        }
        parts[tid] = std::move(part);
    }
    if (invariant_breach) throw internal_error("compare_images: non-integral c'");

    // Chunks are contiguous in k, so the concatenation is (k, c)-sorted
    // and its prefix is the global minimum set regardless of thread count.
    BrokenScan merged;
    for (auto& part : parts) {
        merged.total += part.total;
        for (auto& w : part.witnesses) merged.witnesses.push_back(std::move(w));
    }
    if (merged.witnesses.size() > max_witnesses) merged.witnesses.resize(max_witnesses);
    return merged;
}

}  // namespace

std::vector<ImageComparisonReport> compare_images(const DeformationType& dt,
                                                  const PolarizationNumerics& pn,
                                                  std::size_t max_witnesses) {
    require_hilb_or_kum(dt, "compare_images");
    const Int mt = lattice::mtilde(dt);
    const auto enumeration = moduli::enumerate_components(dt, pn);
    if (enumeration.empty()) return {};

    const Int minus_one = 2 * mt - 1;
    std::vector<Int> nontrivial;
    for (const Int& a : lattice::discriminant_units(mt))
        if (a != 1 && a != minus_one) nontrivial.push_back(a);

    // The broken set does not depend on the class, only on the unit.
    std::vector<BrokenScan> scans;
    scans.reserve(nontrivial.size());
    for (const Int& a : nontrivial)
        scans.push_back(scan_broken_walls(dt, pn.gamma, a, max_witnesses));

    std::vector<ImageComparisonReport> out;
    for (const auto& t_class : enumeration) {
        const auto& first = t_class.front();
        const Int deck = deck_group_bound(dt, pn, first);

        if (nontrivial.empty()) {
            ImageComparisonReport rep;
            rep.unit = 1;
            rep.t_index = first.t_index;
            rep.action = ComponentAction::Fix;
            rep.broken_total = 0;
            rep.verdict = Verdict::IdenticalImages;
            rep.deck_bound = deck;
            out.push_back(std::move(rep));
            continue;
        }

        for (std::size_t i = 0; i < nontrivial.size(); ++i) {
            const Int& a = nontrivial[i];
            ImageComparisonReport rep;
            rep.unit = a;
            rep.t_index = first.t_index;
            rep.deck_bound = deck;

            const Int h0 = first.h_star.front();
            const Int ah = mod_floor(a * h0, 2 * mt);
            const bool fixes =
                std::find(first.h_star.begin(), first.h_star.end(), ah) != first.h_star.end();
            rep.action = fixes ? ComponentAction::Fix : ComponentAction::Swap;

            rep.broken_walls = scans[i].witnesses;
            rep.broken_total = scans[i].total;

            if (rep.broken_total == 0)
                rep.verdict = Verdict::IdenticalImages;
            else if (rep.action == ComponentAction::Swap)
                rep.verdict = Verdict::DifferentImages;
            else
                rep.verdict = Verdict::NotGInvariant;
            out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace hk::periodmap
