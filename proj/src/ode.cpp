#include "kw/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "kw/families.hpp"

namespace kw {

namespace {

void check_lambda(double lambda) {
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw InvalidParameterError("lambda must be a nonzero finite real");
    }
}

}  // namespace

std::pair<double, double> autonomous_rhs(double lambda, const AutonomousState& st) {
    check_lambda(lambda);
    const double a = 0.5 * (lambda - 1.0 / lambda);
    const double b = 0.5 * (lambda + 1.0 / lambda);  // nonzero for real lambda
    const double q = st.u * st.u - st.v * st.v - 0.25;
    const double p = 2.0 * st.u * st.v;
    return {(a * q - p) / b, (-a * p - q) / b};
}

double first_integral(double lambda, const AutonomousState& st) {
    check_lambda(lambda);
    const double a = 0.5 * (lambda - 1.0 / lambda);
    const double u = st.u, v = st.v;
    return u * u * u / 3.0 - u * v * v - 0.25 * u - a * (v * v * v / 3.0 - u * u * v + 0.25 * v);
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600, 0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Vec2 {
    double u, v;
};

}  // namespace

Trajectory integrate(double lambda, const AutonomousState& init, double s_end, double tol) {
    check_lambda(lambda);
    if (!(tol > 0.0) || !std::isfinite(init.u) || !std::isfinite(init.v)) {
        throw InvalidParameterError("integrate requires finite initial state and tol > 0");
    }

    Trajectory traj;
    const double span = s_end - init.s;
    const double dir = span >= 0.0 ? 1.0 : -1.0;
    const double h_min = 1e-14 * std::abs(span);

    auto rhs = [lambda](const Vec2& y) -> Vec2 {
        const auto [du, dv] = autonomous_rhs(lambda, {y.u, y.v, 0.0});
        return {du, dv};
    };

    Vec2 y{init.u, init.v};
    double s = init.s;
    traj.samples.push_back({y.u, y.v, s});
    traj.first_integrals.push_back(first_integral(lambda, {y.u, y.v, s}));

    if (span == 0.0) return traj;

    double h = dir * std::min(0.01 * std::abs(span) + 1e-6, std::abs(span));

    while (dir * (s_end - s) > 0.0) {
        if (std::abs(h) > std::abs(s_end - s)) h = s_end - s;

        std::array<Vec2, 7> k;
        k[0] = rhs(y);
        bool finite = true;
        for (int i = 1; i < 7 && finite; ++i) {
            Vec2 yi = y;
            for (int j = 0; j < i; ++j) {
                yi.u += h * kA[i][j] * k[j].u;
                yi.v += h * kA[i][j] * k[j].v;
            }
            if (!std::isfinite(yi.u) || !std::isfinite(yi.v)) {
                finite = false;
                break;
            }
            k[i] = rhs(yi);
        }

        double err = std::numeric_limits<double>::infinity();
        Vec2 y5{y.u, y.v};
        if (finite) {
            Vec2 y4{y.u, y.v};
            for (int i = 0; i < 7; ++i) {
                y5.u += h * kB5[i] * k[i].u;
                y5.v += h * kB5[i] * k[i].v;
                y4.u += h * kB4[i] * k[i].u;
                y4.v += h * kB4[i] * k[i].v;
            }
            if (std::isfinite(y5.u) && std::isfinite(y5.v)) {
                err = std::hypot(y5.u - y4.u, y5.v - y4.v);
            }
        }

        if (err <= tol) {
            y = y5;
            s += h;
            traj.steps_accepted++;
            traj.max_error_estimate = std::max(traj.max_error_estimate, err);
            traj.samples.push_back({y.u, y.v, s});
            traj.first_integrals.push_back(first_integral(lambda, {y.u, y.v, s}));
            const double e = std::max(err / tol, 1e-10);
            h *= std::clamp(0.9 * std::pow(e, -0.2), 0.2, 5.0);
        } else {
            traj.steps_rejected++;
            const double e = std::isfinite(err) ? err / tol : 1e10;
            h *= std::clamp(0.9 * std::pow(e, -0.2), 0.05, 0.9);
        }

        if (std::abs(h) < h_min) {
            traj.blown_up = true;
            break;
        }
    }
    return traj;
}

double branch_identity_check(double C, double t) {
    const double d = C * C * t * t + 4.0 * C * t + 1.0;
    const double w = 0.5 * (C * C * t * t - 2.0 * C * t + 1.0) / d;
    const double u_f1 = t * 3.0 * C / d - 0.5;
    return w + u_f1;
}

double cubic_orbit_residual(const AutonomousState& st) {
    const double u = st.u, v = st.v;
    const double b = 2.0 * u + 1.0;
    return 12.0 * v * v * u - b * b * (u - 1.0);
}

AutonomousState f1_orbit_state(double C, double t) {
    const RadialProfile p = profile(SolutionFamily{FamilyTag::F1, C});
    p.check(t);
    return {t * p.f(t) - 0.5, t * p.g(t), std::log(t)};
}

std::array<std::array<double, 2>, 2> rhs_jacobian(double lambda, const AutonomousState& st, double h) {
    std::array<std::array<double, 2>, 2> jac{};
    for (int col = 0; col < 2; ++col) {
        AutonomousState plus = st, minus = st;
        (col == 0 ? plus.u : plus.v) += h;
        (col == 0 ? minus.u : minus.v) -= h;
        const auto fp = autonomous_rhs(lambda, plus);
        const auto fm = autonomous_rhs(lambda, minus);
        jac[0][col] = (fp.first - fm.first) / (2.0 * h);
        jac[1][col] = (fp.second - fm.second) / (2.0 * h);
    }
    return jac;
}

}  // namespace kw
