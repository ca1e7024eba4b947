#pragma once

// Cylinder picture: the left-invariant S^3 frame, the pullback profiles of
// the half-instanton solutions, the Nahm pole at y = 0, and exponential
// decay at y -> infinity.

#include <array>
#include <utility>

#include "kw/families.hpp"

namespace kw {

struct SphereFrame {
    Quaternion x;                           // unit base point
    std::array<std::array<double, 4>, 3> e; // e_a as 4-vectors (coframe = metric dual)
};

enum class CylinderSolution { PlusHalf, MinusHalf };

// The su(2) triple t_1 = I/2, t_2 = J/2, t_3 = K/2 with
// [t_a, t_b] = eps_abc t_c.
std::array<ImQuaternion, 3> nahm_triple();

// Throws InvalidParameterError unless ||x| - 1| < 1e-10.
SphereFrame frame(const Quaternion& x);

// (a(y), p(y)): coefficients of sum_a t_a e_a* in A and phi on the cylinder.
std::pair<double, double> pullback_profiles(CylinderSolution which, double y);

// |y p(y) - 1|; linear in y near the pole.
double nahm_pole_residual(CylinderSolution which, double y);

// Boundary-formula instanton number of the corresponding radial profile
// restricted to t in [1/C, infinity); +-1/2.
double cylinder_instanton(CylinderSolution which, double C = 1.0);

// Max coefficient error of Im(xbar dx) = e1* I + e2* J + e3* K at unit x.
double frame_decomposition_residual(const Quaternion& x);

// Contract the Euclidean field at x = e^y omega against the frame at omega
// and rescale to the cylinder coframe; returns (a, p) again. Agrees with
// pullback_profiles.
std::pair<double, double> pullback_via_field(CylinderSolution which, double y,
                                             const Quaternion& omega);

// Least-squares slope of log fn over y in [y_lo, y_hi] at n samples.
double log_slope(const std::function<double(double)>& fn, double y_lo, double y_hi, int n);

}  // namespace kw
