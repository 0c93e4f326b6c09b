// Benchmark of the OpenMP kernels against their serial references:
// the unit-group scan and the surrogate orthogonal-wall scan.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hk/oracle.hpp"

using namespace hk;
using namespace hk::oracle;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long unit_mt = argc > 1 ? std::atol(argv[1]) : 200000;
    long bound = argc > 2 ? std::atol(argv[2]) : 14;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        std::vector<Int> serial, parallel;
        const double ts = seconds([&] { serial = brute_units_serial(unit_mt); });
        const double tp = seconds([&] { parallel = brute_units(unit_mt); });
        std::printf("unit scan, mt = %ld:        serial %.3fs, parallel %.3fs (x%.2f)%s\n",
                    unit_mt, ts, tp, ts / tp, serial == parallel ? "" : "  MISMATCH");
    }

    {
        const Int mt = 6;
        const auto h = find_polarization_vector(mt, 6, 2, bound);
        if (!h) {
            std::printf("wall scan: no polarization vector within bound %ld\n", bound);
            return 1;
        }
        std::map<WallKey, SurrogateVector> serial, parallel;
        const double ts = seconds([&] { serial = orthogonal_wall_scan_serial(mt, *h, bound); });
        const double tp = seconds([&] { parallel = orthogonal_wall_scan(mt, *h, bound); });
        std::printf("wall scan, bound = %ld:      serial %.3fs, parallel %.3fs (x%.2f)%s\n",
                    bound, ts, tp, ts / tp, serial == parallel ? "" : "  MISMATCH");
    }
    return 0;
}
