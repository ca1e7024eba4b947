#pragma once

// Adaptive Gauss-Kronrod 7-15 quadrature. Panels are bisected until the
// embedded error estimate clears the tolerance; integrands over [0, inf)
// are handled by the caller via explicit tail antiderivatives.

#include <functional>

namespace kw {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;       // accumulated Kronrod-Gauss estimate
    int panels = 0;           // leaf panels evaluated
    bool converged = false;
};

// Integrate fn over [a, b]; abs_tol is the target on the summed error
// estimate. Recursion gives up (converged = false) past max_depth per panel.
QuadResult integrate_gk(const std::function<double(double)>& fn, double a, double b,
                        double abs_tol, int max_depth = 48);

// Same, with the initial panel split log-uniformly into n pieces first;
// suited to integrands with power-law behavior near a > 0.
QuadResult integrate_gk_log(const std::function<double(double)>& fn, double a, double b,
                            double abs_tol, int initial_panels = 16, int max_depth = 48);

}  // namespace kw
