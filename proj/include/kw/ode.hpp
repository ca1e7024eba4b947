#pragma once

// The autonomous phase-plane system in (u~, v~, s = ln t) coordinates, its
// cubic first integral, and an adaptive RK4(5) integrator with a
// conserved-quantity audit trail.

#include <cstddef>
#include <utility>
#include <vector>

#include "kw/radial.hpp"

namespace kw {

struct AutonomousState {
    double u = 0.0;  // u~ = t f - 1/2
    double v = 0.0;  // v~ = t g
    double s = 0.0;  // s = ln t
};

// (u~', v~') for real lambda != 0. For lambda = -1 this reduces to
// u~' = 2 u~ v~, v~' = u~^2 - v~^2 - 1/4.
std::pair<double, double> autonomous_rhs(double lambda, const AutonomousState& st);

// I = u^3/3 - u v^2 - u/4 - (lambda - 1/lambda)/2 * (v^3/3 - u^2 v + v/4);
// constant along trajectories.
double first_integral(double lambda, const AutonomousState& st);

struct Trajectory {
    std::vector<AutonomousState> samples;     // s strictly increasing
    std::vector<double> first_integrals;      // per sample
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
    double max_error_estimate = 0.0;          // max accepted embedded error
    bool blown_up = false;                    // step size underflowed near blow-up
};

// Adaptive Dormand-Prince 4(5) with elementary step control. Each accepted step's
// embedded error estimate is <= tol. On finite-s blow-up the trajectory is
// truncated at the last valid state and flagged.
Trajectory integrate(double lambda, const AutonomousState& init, double s_end, double tol);

// W(ln t) + u~_F1(t) with W the explicit branch solution
// W(ln t) = (C^2 t^2 - 2Ct + 1) / (2 (C^2 t^2 + 4Ct + 1)); identically 0.
double branch_identity_check(double C, double t);

// 12 v~^2 u~ - (2 u~ + 1)^2 (u~ - 1); zero along the lambda = -1 orbit
// through (-1/2, 0).
double cubic_orbit_residual(const AutonomousState& st);

// State on the F1(C) orbit at parameter t (s = ln t). t must avoid the g
// pole at 1/C.
AutonomousState f1_orbit_state(double C, double t);

// Central-difference Jacobian of the autonomous field at a point.
std::array<std::array<double, 2>, 2> rhs_jacobian(double lambda, const AutonomousState& st, double h);

}  // namespace kw
