#pragma once

// The rotationally invariant ansatz A = Im(f(t) xbar dx), phi = Im(g(t) xbar dx)
// with t = |x|^2, its exact reduction to scalar self-dual / anti-self-dual
// coefficients, and the reduced ODE residuals.

#include <functional>
#include <stdexcept>
#include <vector>

#include "kw/forms.hpp"
#include "kw/quat.hpp"

namespace kw {

struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which coordinate 1-form the scalar profiles multiply.
enum class Ansatz { XbarDx, XDxbar };

struct RadialProfile {
    // Profiles evaluate in extended precision: the reduced residuals cancel
    // terms of size f^2 ~ 1e6 near t = 0 for the 1/t branch, and the
    // double-rounding floor there would sit right at the verification
    // tolerance.
    std::function<long double(long double)> f, fp;
    std::function<long double(long double)> g, gp;
    std::vector<double> singular_t;       // poles of f or g in [0, inf)
    std::vector<double> f_singular_t;     // the subset coming from f alone
    Ansatz ansatz = Ansatz::XbarDx;

    // Evaluation rejects t within this distance of a declared pole.
    static constexpr double kGuard = 1e-6;

    bool near_singularity(double t) const;
    void check(double t) const;  // throws SingularityError inside the guard
    void check_f(double t) const;  // guards only the poles of f
};

// Scalar coefficients of the SD part (on xbar dx ^ dxbar x) and ASD part
// (on dxbar ^ dx) of F_A, phi^phi and d_A phi.
struct ReducedComponents {
    double fa_sd, fa_asd;
    double pp_sd, pp_asd;
    double dap_sd, dap_asd;
};

// A at x; component i is f(t) Im(conj(x) e_i), or f(t) Im(x conj(e_i)) for
// the conjugate ansatz.
Su2OneForm eval_connection(const RadialProfile& p, const Quaternion& x);
// Same with g in place of f.
Su2OneForm eval_higgs(const RadialProfile& p, const Quaternion& x);

ReducedComponents reduced_components(const RadialProfile& p, double t);

// Left-hand sides of the two lambda-family reduced equations
//   f' + lambda g' + f^2 - g^2 + 2 lambda f g
//   t f' - t g'/lambda + 2 f - 2 g/lambda + g^2 t - f^2 t + 2 t f g/lambda.
// lambda must be real and nonzero.
std::pair<double, double> kw_ode_residual(const RadialProfile& p, double lambda, double t);

// Residuals of the lambda = 0 system  f' + f^2 - g^2,  t g' + 2 g - 2 t f g.
std::pair<double, double> asd_ode_residual(const RadialProfile& p, double t);

// Mirror (orientation-reversed / conjugate-ansatz) lambda = 0 system:
//   t f' + 2 f - t f^2 + t g^2,  g' + 2 f g.
// This is what profiles written for the x dxbar ansatz satisfy.
std::pair<double, double> asd_ode_residual_mirror(const RadialProfile& p, double t);

// Norm of the d_A(star phi) 4-form density at a point with |x|^2 = t,
// assembled through the forms module from exact derivatives. Vanishes
// identically for the rotationally invariant ansatz and any metric h(t).
double dastar_phi_residual(const RadialProfile& p, const Metric& m, const Quaternion& x);

// Reconstruction helpers: the curvature / phi^phi / d_A phi 2-forms at x
// assembled from the reduced coefficients against the basis forms.
Su2TwoForm assemble_curvature(const RadialProfile& p, const Quaternion& x);
Su2TwoForm assemble_phi_wedge_phi(const RadialProfile& p, const Quaternion& x);
Su2TwoForm assemble_da_phi(const RadialProfile& p, const Quaternion& x);

}  // namespace kw
