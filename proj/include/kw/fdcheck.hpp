#pragma once

// Finite-difference harness: verifies the full 4D equations for arbitrary
// sampled fields. Uses only the samplers and the forms module, never the
// reduced ODE formulas, so agreement with the radial residuals is an
// independent cross-check.

#include <functional>
#include <vector>

#include "kw/families.hpp"
#include "kw/forms.hpp"

namespace kw {

// Which pair of equations the sampled field is supposed to satisfy.
enum class KwMode {
    Kw,         // F - phi^phi - star d_A phi = 0 and d_A star phi = 0
    KwConj,     // orientation-reversed fields: + star d_A phi
    Asd,        // (F - phi^phi)^+ = 0, (d_A phi)^- = 0
    AsdMirror,  // the conjugate-ansatz version: swap +/- roles
};

struct FieldSampler {
    std::function<Su2OneForm(const Quaternion&)> A;
    std::function<Su2OneForm(const Quaternion&)> phi;
    std::function<bool(const Quaternion&)> admissible;
    KwMode mode = KwMode::Kw;
};

struct ResidualReport {
    double r_kw = 0.0;   // norm of the first-equation 2-form at x
    double r_div = 0.0;  // norm of the d_A star phi density
    double h = 0.0;
    double order_estimate = 0.0;  // from h vs h/2
};

// Catalog sampler with a guard band (in |x|^2) around every declared pole.
FieldSampler sampler_for(const SolutionFamily& fam, double guard_band = 0.05);

// dA by centered differences plus A ^ A; O(h^2). Throws SingularityError
// when the 2h-ball leaves the admissible domain.
Su2TwoForm fd_curvature(const FieldSampler& s, const Quaternion& x, double h);

// Covariant derivative d phi + A^phi + phi^A by the same stencils.
Su2TwoForm fd_da_phi(const FieldSampler& s, const Quaternion& x, double h);

// d_A star phi density (Euclidean star).
ImQuaternion fd_dastar_phi(const FieldSampler& s, const Quaternion& x, double h);

ResidualReport kw_residual_4d(const FieldSampler& s, const Quaternion& x, double h);

// Median Richardson order over the points, from steps h0, h0/2, h0/4.
double order_scan(const FieldSampler& s, const std::vector<Quaternion>& points, double h0);

// Default step: 1e-3 max(1, |x|).
double default_step(const Quaternion& x);

}  // namespace kw
