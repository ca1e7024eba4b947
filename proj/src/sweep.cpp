#include "kw/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace kw {

namespace {

SweepRow sweep_row(const RadialProfile& p, Governing gov, double t) {
    SweepRow row;
    row.t = t;
    if (p.near_singularity(t)) {
        row.skipped = true;
        return row;
    }
    std::pair<double, double> r;
    switch (gov) {
        case Governing::AsdLambdaZero: r = asd_ode_residual(p, t); break;
        case Governing::AsdLambdaZeroMirror: r = asd_ode_residual_mirror(p, t); break;
        case Governing::KwLambdaMinusOne:
        case Governing::None: r = kw_ode_residual(p, -1.0, t); break;
    }
    row.r1 = r.first;
    row.r2 = r.second;
    return row;
}

ResidualReport scan_point(const FieldSampler& s, const Quaternion& x, double h) {
    try {
        return kw_residual_4d(s, x, h);
    } catch (const SingularityError&) {
        ResidualReport rep;
        rep.h = h;
        rep.r_kw = rep.r_div = rep.order_estimate = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }
}

}  // namespace

std::vector<double> make_grid(double t_min, double t_max, int count, bool log_spaced) {
    if (count < 2 || !(t_min < t_max)) {
        throw InvalidParameterError("grid needs count >= 2 and t_min < t_max");
    }
    if (log_spaced && !(t_min > 0.0)) {
        throw InvalidParameterError("log grid needs t_min > 0");
    }
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) {
        const double a = static_cast<double>(i) / (count - 1);
        g[i] = log_spaced ? std::exp(std::log(t_min) + a * (std::log(t_max) - std::log(t_min)))
                          : t_min + a * (t_max - t_min);
    }
    return g;
}

std::vector<SweepRow> residual_sweep_serial(const SolutionFamily& fam,
                                            const std::vector<double>& grid) {
    const RadialProfile p = profile(fam);
    const Governing gov = governing_system(fam.tag);
    std::vector<SweepRow> rows(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = sweep_row(p, gov, grid[i]);
    return rows;
}

std::vector<SweepRow> residual_sweep_omp(const SolutionFamily& fam,
                                         const std::vector<double>& grid) {
    const RadialProfile p = profile(fam);
    const Governing gov = governing_system(fam.tag);
    std::vector<SweepRow> rows(grid.size());
    const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) rows[i] = sweep_row(p, gov, grid[i]);
    return rows;
}

std::vector<ResidualReport> fd_scan_serial(const FieldSampler& s,
                                           const std::vector<Quaternion>& points, double h) {
    std::vector<ResidualReport> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = scan_point(s, points[i], h);
    return out;
}

std::vector<ResidualReport> fd_scan_omp(const FieldSampler& s,
                                        const std::vector<Quaternion>& points, double h) {
    std::vector<ResidualReport> out(points.size());
    const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) out[i] = scan_point(s, points[i], h);
    return out;
}

}  // namespace kw
