#pragma once

// Batch kernels for residual sweeps over t-grids and FD point scans. Each
// kernel exists twice: an OpenMP-parallel version used by the CLI and a
// serial reference the tests compare against bit-for-bit (the per-point
// work is identical; only the loop schedule differs).

#include <vector>

#include "kw/families.hpp"
#include "kw/fdcheck.hpp"

namespace kw {

// Log- or linearly spaced grid with `count` points, endpoints included.
std::vector<double> make_grid(double t_min, double t_max, int count, bool log_spaced);

struct SweepRow {
    double t = 0.0;
    double r1 = 0.0, r2 = 0.0;  // the two reduced-equation residuals
    bool skipped = false;       // inside a pole guard
};

// Residuals of the family's own governing system on the grid; Tan rows use
// the lambda = -1 system and are expected to blow up, not to pass.
std::vector<SweepRow> residual_sweep_serial(const SolutionFamily& fam,
                                            const std::vector<double>& grid);
std::vector<SweepRow> residual_sweep_omp(const SolutionFamily& fam,
                                         const std::vector<double>& grid);

// Full 4D FD residual reports at the given points (guard violations are
// reported as quiet NaN rows rather than aborting the batch).
std::vector<ResidualReport> fd_scan_serial(const FieldSampler& s,
                                           const std::vector<Quaternion>& points, double h);
std::vector<ResidualReport> fd_scan_omp(const FieldSampler& s,
                                        const std::vector<Quaternion>& points, double h);

}  // namespace kw
