#include "hk/oracle.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hk/intarith.hpp"

namespace hk::oracle {

using namespace intarith;

namespace {

// Coordinate scan order 0, 1, -1, 2, -2, ...: witnesses come out with
// small coordinates and the order is deterministic.
long zigzag(long i) {
    const long mag = (i + 1) / 2;
    return i % 2 == 1 ? mag : -mag;
}

}  // namespace

std::vector<Int> brute_units_serial(const Int& mt) {
    if (mt < 1) throw std::invalid_argument("brute_units: mt must be positive");
    const Int two_mt = 2 * mt;
    const Int four_mt = 4 * mt;
    std::vector<Int> out;
    for (Int a = 1; a < two_mt; ++a)
        if ((a * a) % four_mt == 1) out.push_back(a);
    return out;
}

std::vector<Int> brute_units(const Int& mt) {
    if (mt < 1) throw std::invalid_argument("brute_units: mt must be positive");
#ifdef _OPENMP
    if (mt >= 512) {
        const Int two_mt = 2 * mt;
        const Int four_mt = 4 * mt;
        const int nth = omp_get_max_threads();
        std::vector<std::vector<Int>> parts(nth);
#pragma omp parallel num_threads(nth)
        {
            const int tid = omp_get_thread_num();
            const int total = omp_get_num_threads();
            const Int lo = two_mt * tid / total;
            const Int hi = two_mt * (tid + 1) / total;
            std::vector<Int> local;
            for (Int a = lo; a < hi; ++a)
                if ((a * a) % four_mt == 1) local.push_back(a);
            parts[tid] = std::move(local);
        }
        std::vector<Int> out;
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }
#endif
    return brute_units_serial(mt);
}

std::vector<Int> brute_residues(const Int& mt, const Int& n, const Int& gamma) {
    if (mt < 1 || n < 1 || gamma < 1)
        throw std::invalid_argument("brute_residues: arguments must be positive");
    const Int gamma2 = gamma * gamma;
    std::vector<Int> out;
    for (Int lift = 0; lift < gamma2; ++lift) {
        if ((lift * lift * mt + n) % gamma2 != 0) continue;
        Int b = mod_floor(lift, gamma);
        if (gcd(b, gamma) != 1) continue;
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int brute_unit_image(const Int& mt, const Int& gamma) {
    if (gamma < 1) throw std::invalid_argument("brute_unit_image: gamma must be positive");
    std::vector<Int> seen;
    for (const Int& a : brute_units(mt)) {
        Int r = mod_floor(a, gamma);
        if (std::find(seen.begin(), seen.end(), r) == seen.end()) seen.push_back(r);
    }
    return Int(seen.size());
}

Int surrogate_square(const Int& mt, const SurrogateVector& v) {
    return 2 * (v[0] * v[1] + v[2] * v[3]) - 2 * mt * v[4] * v[4];
}

Int surrogate_pairing(const Int& mt, const SurrogateVector& u, const SurrogateVector& v) {
    return u[0] * v[1] + u[1] * v[0] + u[2] * v[3] + u[3] * v[2] - 2 * mt * u[4] * v[4];
}

Int surrogate_divisibility(const Int& mt, const SurrogateVector& v) {
    Int g = gcd(gcd(v[0], v[1]), gcd(v[2], v[3]));
    return gcd(g, 2 * mt * v[4]);
}

bool surrogate_primitive(const SurrogateVector& v) {
    Int g = gcd(gcd(v[0], v[1]), gcd(gcd(v[2], v[3]), v[4]));
    return g == 1;
}

Int surrogate_kstar(const Int& mt, const SurrogateVector& v) {
    if (!surrogate_primitive(v))
        throw std::invalid_argument("surrogate_kstar: vector must be primitive");
    const Int div = surrogate_divisibility(mt, v);
    Int r = mod_floor(2 * mt * v[4] / div, 2 * mt);
    return std::min(r, Int(2 * mt - r));
}

std::vector<SurrogateVector> find_polarization_vectors(const Int& mt, const Int& n,
                                                       const Int& gamma, long bound,
                                                       std::size_t max_count) {
    if (mt < 1 || n < 1 || gamma < 1 || bound < 0)
        throw std::invalid_argument("find_polarization_vectors: bad arguments");
    std::vector<SurrogateVector> out;
    const long width = 2 * bound + 1;
    for (long i1 = 0; i1 < width; ++i1) {
        const Int x1 = zigzag(i1);
        for (long i2 = 0; i2 < width; ++i2) {
            const Int x2 = zigzag(i2);
            const Int p12 = x1 * x2;
            for (long i3 = 0; i3 < width; ++i3) {
                const Int x3 = zigzag(i3);
                for (long i4 = 0; i4 < width; ++i4) {
                    const Int x4 = zigzag(i4);
                    // h^2 = 2n forces x5^2 = (x1*x2 + x3*x4 - n)/mt
                    const Int rhs = p12 + x3 * x4 - n;
                    if (rhs < 0 || rhs % mt != 0) continue;
                    const Int sq = rhs / mt;
                    if (mpz_perfect_square_p(sq.get_mpz_t()) == 0) continue;
                    Int root;
                    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
                    if (root > bound) continue;
                    for (int sgn = 0; sgn < (root == 0 ? 1 : 2); ++sgn) {
                        SurrogateVector h{x1, x2, x3, x4, sgn == 0 ? root : -root};
                        if (!surrogate_primitive(h)) continue;
                        if (surrogate_divisibility(mt, h) != gamma) continue;
                        out.push_back(std::move(h));
                        if (max_count != 0 && out.size() >= max_count) return out;
                    }
                }
            }
        }
    }
    return out;
}

std::optional<SurrogateVector> find_polarization_vector(const Int& mt, const Int& n,
                                                        const Int& gamma, long bound) {
    auto hs = find_polarization_vectors(mt, n, gamma, bound, 1);
    if (hs.empty()) return std::nullopt;
    return hs.front();
}

namespace {

// Scan of kappa orthogonal to h over one range of the leading
// coordinate. With h5 != 0 the orthogonality solves for x5 directly;
// with h5 == 0 the plane condition is checked first and x5 runs free.
void scan_range(const Int& mt, const SurrogateVector& h, long bound, long i1_begin, long i1_end,
                std::map<WallKey, SurrogateVector>& found) {
    const long width = 2 * bound + 1;
    const Int two_mt = 2 * mt;
    const Int h5coef = two_mt * h[4];
    for (long i1 = i1_begin; i1 < i1_end; ++i1) {
        const Int x1 = zigzag(i1);
        for (long i2 = 0; i2 < width; ++i2) {
            const Int x2 = zigzag(i2);
            const Int pair12 = x1 * h[1] + x2 * h[0];
            const Int sq12 = x1 * x2;
            for (long i3 = 0; i3 < width; ++i3) {
                const Int x3 = zigzag(i3);
                for (long i4 = 0; i4 < width; ++i4) {
                    const Int x4 = zigzag(i4);
                    const Int pair4 = pair12 + x3 * h[3] + x4 * h[2];
                    long i5_count;
                    Int solved_x5;
                    if (h[4] != 0) {
                        // pairing = pair4 - 2*mt*h5*x5 = 0
                        if (pair4 % h5coef != 0) continue;
                        solved_x5 = pair4 / h5coef;
                        if (abs(solved_x5) > bound) continue;
                        i5_count = 1;
                    } else {
                        if (pair4 != 0) continue;
                        i5_count = width;
                    }
                    const Int sq4 = 2 * (sq12 + x3 * x4);
                    for (long i5 = 0; i5 < i5_count; ++i5) {
                        const Int x5 = h[4] != 0 ? solved_x5 : Int(zigzag(i5));
                        const Int square = sq4 - two_mt * x5 * x5;
                        if (square >= 0) continue;
                        SurrogateVector kappa{x1, x2, x3, x4, x5};
                        if (!surrogate_primitive(kappa)) continue;
                        WallKey key{surrogate_kstar(mt, kappa), square / 2};
                        found.emplace(key, kappa);  // first in scan order wins
                    }
                }
            }
        }
    }
}

}  // namespace

std::map<WallKey, SurrogateVector> orthogonal_wall_scan_serial(const Int& mt,
                                                               const SurrogateVector& h,
                                                               long bound) {
    std::map<WallKey, SurrogateVector> found;
    scan_range(mt, h, bound, 0, 2 * bound + 1, found);
    return found;
}

std::map<WallKey, SurrogateVector> orthogonal_wall_scan(const Int& mt, const SurrogateVector& h,
                                                        long bound) {
#ifdef _OPENMP
    const long width = 2 * bound + 1;
    const int nth = omp_get_max_threads();
    if (nth > 1 && width >= 2 * nth) {
        std::vector<std::map<WallKey, SurrogateVector>> parts(nth);
#pragma omp parallel num_threads(nth)
        {
            const int tid = omp_get_thread_num();
            const int total = omp_get_num_threads();
            const long lo = width * tid / total;
            const long hi = width * (tid + 1) / total;
            scan_range(mt, h, bound, lo, hi, parts[tid]);
        }
        // Merging in leading-coordinate order keeps the serial
        // first-witness semantics.
        std::map<WallKey, SurrogateVector> found;
        for (auto& part : parts)
            for (auto& [key, vec] : part) found.emplace(key, vec);
        return found;
    }
#endif
    return orthogonal_wall_scan_serial(mt, h, bound);
}

std::optional<SurrogateWitness> surrogate_wall_search(const Int& mt, const Int& n,
                                                      const Int& gamma, const Int& k,
                                                      const Int& l, long bound) {
    // The witness is a pair: different h of the same (n, gamma) admit
    // different bounded kappa, so each candidate h is scanned in turn.
    for (const auto& h : find_polarization_vectors(mt, n, gamma, bound, 0)) {
        auto found = orthogonal_wall_scan(mt, h, bound);
        auto it = found.find(WallKey{k, l});
        if (it != found.end()) return SurrogateWitness{h, it->second};
    }
    return std::nullopt;
}

}  // namespace hk::oracle
