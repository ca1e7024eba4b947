// Timing comparison of the serial reference kernels against the OpenMP
// versions. Prints one line per kernel with both wall times and the speedup.

#include <chrono>
#include <cstdio>

#include "kw/rng.hpp"
#include "kw/sweep.hpp"

using namespace kw;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best,
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count());
    }
    return best;
}

}  // namespace

int main() {
    const SolutionFamily fam{FamilyTag::GluedPlus, 1.0};
    const auto grid = make_grid(1e-3, 1e3, 200000, true);

    volatile double sink = 0.0;
    const double ts = time_best_of(3, [&] {
        const auto rows = residual_sweep_serial(fam, grid);
        sink = sink + rows.back().r1;
    });
    const double tp = time_best_of(3, [&] {
        const auto rows = residual_sweep_omp(fam, grid);
        sink = sink + rows.back().r1;
    });
    std::printf("residual_sweep  %8d rows   serial %.3f s   omp %.3f s   speedup %.2fx\n",
                static_cast<int>(grid.size()), ts, tp, ts / tp);

    const FieldSampler s = sampler_for(fam);
    SplitMix64 rng(17);
    std::vector<Quaternion> pts;
    while (pts.size() < 50000) {
        Quaternion q = rng.gaussian_quaternion();
        q = q * (rng.uniform(0.8, 2.0) / q.norm());
        pts.push_back(q);
    }
    const double fs = time_best_of(3, [&] {
        const auto rep = fd_scan_serial(s, pts, 1e-3);
        sink = sink + rep.back().h;
    });
    const double fp = time_best_of(3, [&] {
        const auto rep = fd_scan_omp(s, pts, 1e-3);
        sink = sink + rep.back().h;
    });
    std::printf("fd_scan         %8d pts     serial %.3f s   omp %.3f s   speedup %.2fx\n",
                static_cast<int>(pts.size()), fs, fp, fs / fp);
    return 0;
}
