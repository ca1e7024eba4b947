#include "kw/nahm.hpp"

#include <cmath>

namespace kw {

namespace {

double anti(double u) { return 2.0 * u * u * u - 3.0 * u * u; }

SolutionFamily family_of(CylinderSolution which, double C) {
    return {which == CylinderSolution::PlusHalf ? FamilyTag::F1 : FamilyTag::F2, C};
}

}  // namespace

std::array<ImQuaternion, 3> nahm_triple() {
    return {ImQuaternion{0.5, 0.0, 0.0}, ImQuaternion{0.0, 0.5, 0.0}, ImQuaternion{0.0, 0.0, 0.5}};
}

SphereFrame frame(const Quaternion& x) {
    if (std::abs(x.norm() - 1.0) >= 1e-10) {
        throw InvalidParameterError("frame requires a unit quaternion base point");
    }
    SphereFrame fr;
    fr.x = x;
    // Right translates e_a = x u_a of the imaginary units; with the Hamilton
    // product these are the vectors whose coframe satisfies
    // Im(xbar dx) = e1* I + e2* J + e3* K on the nose.
    const double x1 = x.w, x2 = x.x, x3 = x.y, x4 = x.z;
    fr.e[0] = {-x2, x1, x4, -x3};
    fr.e[1] = {-x3, -x4, x1, x2};
    fr.e[2] = {-x4, x3, -x2, x1};
    return fr;
}

std::pair<double, double> pullback_profiles(CylinderSolution which, double y) {
    if (!(y > 0.0)) throw InvalidParameterError("cylinder profiles are defined for y > 0");
    const double t = std::exp(2.0 * y);
    const RadialProfile p = profile(family_of(which, 1.0));
    return {2.0 * p.f(t), 2.0 * p.g(t)};
}

double nahm_pole_residual(CylinderSolution which, double y) {
    const auto [a, p] = pullback_profiles(which, y);
    (void)a;
    return std::abs(y * p - 1.0);
}

double cylinder_instanton(CylinderSolution which, double C) {
    if (!(C > 0.0)) throw InvalidParameterError("C must be positive");
    const SolutionFamily fam = family_of(which, C);
    const RadialProfile p = profile(fam);
    const double tc = 1.0 / C;
    const double ft_start = tc * p.f(tc);  // f is finite at the g pole
    const double ft_end = ftilde_limits(fam).second;
    return anti(ft_end) - anti(ft_start);
}

double frame_decomposition_residual(const Quaternion& x) {
    const SphereFrame fr = frame(x);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const ImQuaternion lhs = (x.conj() * Quaternion::unit(i)).im();
        const ImQuaternion rhs{fr.e[0][i], fr.e[1][i], fr.e[2][i]};
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

std::pair<double, double> pullback_via_field(CylinderSolution which, double y,
                                             const Quaternion& omega) {
    if (std::abs(omega.norm() - 1.0) >= 1e-10) {
        throw InvalidParameterError("omega must be a unit quaternion");
    }
    const double R = std::exp(y);
    const Quaternion x = omega * R;
    const RadialProfile p = profile(family_of(which, 1.0));
    const Su2OneForm a = eval_connection(p, x);
    const Su2OneForm phi = eval_higgs(p, x);
    const SphereFrame fr = frame(omega);

    // Contract with the pushed-forward frame vector R e_1 and project on I;
    // the cylinder coframe rescaling contributes the factor 2 e^{-2y}.
    const ImQuaternion unit_i{1.0, 0.0, 0.0};
    auto coeff = [&](const Su2OneForm& w) {
        ImQuaternion q;
        for (int i = 0; i < 4; ++i) q += w.c[i] * (R * fr.e[0][i]);
        return 2.0 * std::exp(-2.0 * y) * dot(q, unit_i);
    };
    return {coeff(a), coeff(phi)};
}

double log_slope(const std::function<double(double)>& fn, double y_lo, double y_hi, int n) {
    if (n < 2 || !(y_hi > y_lo)) throw InvalidParameterError("log_slope needs n >= 2, y_hi > y_lo");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = y_lo + (y_hi - y_lo) * i / (n - 1);
        const double v = std::log(fn(x));
        sx += x;
        sy += v;
        sxx += x * x;
        sxy += x * v;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace kw
