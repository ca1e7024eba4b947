#include "kw/quadrature.hpp"

#include <cmath>

namespace kw {

namespace {

// Kronrod-15 nodes on [0,1] side (symmetric) and weights; Gauss-7 weights
// sit on the odd Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct PanelEval {
    double kronrod, err;
};

PanelEval eval_panel(const std::function<double(double)>& fn, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    double resg = 0.0, resk = 0.0;
    const double fc = fn(c);
    resk = kWgk[7] * fc;
    resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double fsum = fn(c - hl * kXgk[j]) + fn(c + hl * kXgk[j]);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    resk *= hl;
    resg *= hl;
    const double err = std::pow(200.0 * std::abs(resk - resg), 1.5);
    return {resk, std::min(std::abs(resk - resg), err)};
}

void adapt(const std::function<double(double)>& fn, double a, double b, double tol,
           int depth, int max_depth, QuadResult& out) {
    const PanelEval pe = eval_panel(fn, a, b);
    if (pe.err <= tol || depth >= max_depth) {
        out.value += pe.kronrod;
        out.error += pe.err;
        out.panels++;
        if (pe.err > tol) out.converged = false;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(fn, a, c, 0.5 * tol, depth + 1, max_depth, out);
    adapt(fn, c, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& fn, double a, double b,
                        double abs_tol, int max_depth) {
    QuadResult out;
    out.converged = true;
    if (a == b) return out;
    adapt(fn, a, b, abs_tol, 0, max_depth, out);
    return out;
}

QuadResult integrate_gk_log(const std::function<double(double)>& fn, double a, double b,
                            double abs_tol, int initial_panels, int max_depth) {
    QuadResult out;
    out.converged = true;
    if (a == b) return out;
    const double la = std::log(a), lb = std::log(b);
    double lo = a;
    for (int i = 1; i <= initial_panels; ++i) {
        const double hi = i == initial_panels ? b : std::exp(la + (lb - la) * i / initial_panels);
        QuadResult piece;
        piece.converged = true;
        adapt(fn, lo, hi, abs_tol / initial_panels, 0, max_depth, piece);
        out.value += piece.value;
        out.error += piece.error;
        out.panels += piece.panels;
        out.converged = out.converged && piece.converged;
        lo = hi;
    }
    return out;
}

}  // namespace kw
