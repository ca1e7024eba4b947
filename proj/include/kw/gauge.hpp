#pragma once

// Gauge-invariant quantities of the catalog solutions: instanton numbers by
// three independent routes, curvature and Higgs-derivative norms, the
// bubbling scaling law, L^2 concentration, and the t = 1 singularity rate.

#include <string>
#include <vector>

#include "kw/families.hpp"
#include "kw/quadrature.hpp"

namespace kw {

struct InstantonReport {
    double k_boundary = 0.0;
    double k_quadrature = 0.0;
    double quadrature_error_estimate = 0.0;
    std::string convention_note;
};

// (2 ftilde^3 - 3 ftilde^2) evaluated between the t -> 0 and t -> infinity
// limits; sign flipped on the conjugate ansatz. Throws if the limits are not
// equilibrium values {0, 1}.
double instanton_boundary(const SolutionFamily& fam);

// Adaptive quadrature of 6 ftilde (ftilde - 1) ftilde' on [0, t_max] plus
// the exact antiderivative tail. Throws if ftilde has a pole in (0, t_max).
double instanton_quadrature(const SolutionFamily& fam, double t_max);

InstantonReport instanton_report(const SolutionFamily& fam, double t_max = 1e6);

// (1/4 pi^2) integral of the tr(F ^ F) density over radial shells up to
// t_max, assembled through the forms module. Defined for the xbar dx ansatz.
double instanton_4d_shell(const SolutionFamily& fam, double t_max = 1e6);

// |F_A|^2 = 6 (t f' + 2f - t f^2)^2 + 6 (f' + f^2)^2 t^2, and the
// (SD, ASD) split of the same.
double curvature_norm_sq(const SolutionFamily& fam, double t);
std::pair<double, double> curvature_norm_sq_split(const SolutionFamily& fam, double t);

// (|F_A^C|(t), C |F_A|(Ct)) for the glued solution; equal identically.
std::pair<double, double> bubbling_check(double C, double t);

// Total L^2 curvature mass of the glued solution at scale C, with the
// 4D radial measure dVol = pi^2 t dt; C-independent by scaling.
double curvature_l2_mass(double C);

// Fraction of the L^2 curvature mass inside |x| <= r.
double concentration_fraction(double C, double r);

// |d_A phi|^2 = 6 t^2 (g' + 2fg)^2 + 6 (t g' + 2g - 2 t f g)^2.
double dAphi_norm_sq(const SolutionFamily& fam, double t);

// integral over (1 + eps, 2) of |d_A phi|^2 pi^2 t dt for F1(1).
double singular_mass(double eps);

// Least-squares slope of log I(eps) against -log eps over the given list;
// the measured divergence exponent of the t = 1 singularity.
double singularity_exponent(const std::vector<double>& eps_list);

}  // namespace kw
