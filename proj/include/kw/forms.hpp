#pragma once

// su(2)-valued differential forms at a point of R^4, wedge products, the
// Hodge star of a conformally flat metric h(t) dx (x) dxbar, and the
// self-dual / anti-self-dual splitting of 2-forms.
//
// Orientation is fixed as dx1^dx2^dx3^dx4 > 0. The 2-form component order
// is (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).

#include <array>
#include <functional>
#include <utility>

#include "kw/quat.hpp"

namespace kw {

struct Su2OneForm {
    std::array<ImQuaternion, 4> c{};  // coefficient of dx_i

    Su2OneForm operator+(const Su2OneForm& o) const {
        Su2OneForm r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Su2OneForm operator-(const Su2OneForm& o) const {
        Su2OneForm r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Su2OneForm operator*(double s) const {
        Su2OneForm r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] * s;
        return r;
    }
    double norm_sq() const {
        double n = 0;
        for (const auto& q : c) n += q.norm_sq();
        return n;
    }
};

struct Su2TwoForm {
    std::array<ImQuaternion, 6> c{};

    // Index of the (i,j) component, 1-based, i<j.
    static constexpr int index(int i, int j) {
        constexpr int lut[5][5] = {{-1, -1, -1, -1, -1},
                                   {-1, -1, 0, 1, 2},
                                   {-1, -1, -1, 3, 4},
                                   {-1, -1, -1, -1, 5},
                                   {-1, -1, -1, -1, -1}};
        return lut[i][j];
    }

    Su2TwoForm operator+(const Su2TwoForm& o) const {
        Su2TwoForm r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Su2TwoForm operator-(const Su2TwoForm& o) const {
        Su2TwoForm r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Su2TwoForm operator*(double s) const {
        Su2TwoForm r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] * s;
        return r;
    }
    double norm_sq() const {
        double n = 0;
        for (const auto& q : c) n += q.norm_sq();
        return n;
    }
};

struct Su2ThreeForm {
    // c[i] multiplies the ascending 3-form omitting dx_{i+1},
    // e.g. c[0] multiplies dx2^dx3^dx4.
    std::array<ImQuaternion, 4> c{};

    Su2ThreeForm operator+(const Su2ThreeForm& o) const {
        Su2ThreeForm r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Su2ThreeForm operator*(double s) const {
        Su2ThreeForm r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] * s;
        return r;
    }
    double norm_sq() const {
        double n = 0;
        for (const auto& q : c) n += q.norm_sq();
        return n;
    }
};

// 1- and 2-forms with full quaternion coefficients; scratch types for the
// closed-form basis 2-forms and the algebraic identities behind them.
struct QuatOneForm {
    std::array<Quaternion, 4> c{};
};

struct QuatTwoForm {
    std::array<Quaternion, 6> c{};

    QuatTwoForm operator+(const QuatTwoForm& o) const {
        QuatTwoForm r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    QuatTwoForm operator*(double s) const {
        QuatTwoForm r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] * s;
        return r;
    }
    Su2TwoForm im() const {
        Su2TwoForm r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i].im();
        return r;
    }
    double max_abs_re() const {
        double m = 0;
        for (const auto& q : c) m = std::max(m, std::abs(q.w));
        return m;
    }
};

// Signs in star(dx_i) = sign_i * (ascending 3-form omitting dx_i); equally
// the signs in dx_i ^ (omit-i 3-form) = sign_i dVol.
inline constexpr double kOrient3[4] = {1.0, -1.0, 1.0, -1.0};

QuatTwoForm wedge(const QuatOneForm& a, const QuatOneForm& b);

// xbar dx and dx xbar-style coordinate 1-forms at x.
QuatOneForm xbar_dx(const Quaternion& x);   // coefficient i: conj(x) e_i
QuatOneForm dxbar_x(const Quaternion& x);   // coefficient i: conj(e_i) x
QuatOneForm x_dxbar(const Quaternion& x);   // coefficient i: x conj(e_i)
QuatOneForm dx_form();                      // coefficient i: e_i
QuatOneForm dxbar_form();                   // coefficient i: conj(e_i)

// The two closed-form basis 2-forms of the rotationally invariant ansatz:
// Im(xbar dx ^ dxbar x) is self-dual with |.|^2 = 24 t^2, dxbar ^ dx is
// anti-self-dual with |.|^2 = 24.
Su2TwoForm basis_sd_form(const Quaternion& x);
Su2TwoForm basis_asd_form();

// Conformal factor of the metric h(t) dx (x) dxbar, t = |x|^2.
struct Metric {
    std::function<double(double)> h;
    std::function<double(double)> hp;  // dh/dt

    static Metric euclidean() {
        return {[](double) { return 1.0; }, [](double) { return 0.0; }};
    }
    // Round metric 4/(1+t)^2 dx (x) dxbar.
    static Metric round() {
        return {[](double t) { return 4.0 / ((1.0 + t) * (1.0 + t)); },
                [](double t) { return -8.0 / ((1.0 + t) * (1.0 + t) * (1.0 + t)); }};
    }
};

// a ^ b with quaternion multiplication of coefficients, imaginary part kept.
// Component (i,j) is Im(a_i b_j - a_j b_i).
Su2TwoForm wedge_one_one(const Su2OneForm& a, const Su2OneForm& b);

// (self-dual, anti-self-dual) parts; sum reconstructs the input exactly.
std::pair<Su2TwoForm, Su2TwoForm> sd_asd_split(const Su2TwoForm& w);

// Euclidean Hodge star on 2-forms (conformally invariant in 4D, so it also
// serves every metric of Metric's form).
Su2TwoForm hodge_star_2(const Su2TwoForm& w);

// star(dx_i) = h(t)^2 star_E(dx_i); the sign pattern follows the fixed
// orientation.
Su2ThreeForm hodge_star_1(const Su2OneForm& w, const Metric& m, double t);

// Hodge star from 3-forms back to 1-forms (star of the omit-i basis forms).
// With the Euclidean metric star_1 followed by this map is -identity.
Su2OneForm hodge_star_3(const Su2ThreeForm& w, const Metric& m, double t);

// Coefficient of dVol in the 1-form ^ 3-form wedge, as an su(2) value.
ImQuaternion wedge_one_three(const Su2OneForm& a, const Su2ThreeForm& b);
ImQuaternion wedge_three_one(const Su2ThreeForm& a, const Su2OneForm& b);

// Coefficient of dVol in tr(w1 ^ w2). The trace pairing on su(2) values is
// tr(ab) := <a,b>, calibrated once so that the 4D density of a curvature
// 2-form integrates to the same instanton number as the radial boundary
// formula (anti-self-dual fields come out negative).
double fourform_trace_density(const Su2TwoForm& w1, const Su2TwoForm& w2);

// Pointwise inner product of su(2) 2-forms under the frozen norm convention
// (sum of coefficient inner products; the scale is fixed by the curvature
// norm identities and turns out to be 1).
double inner(const Su2TwoForm& a, const Su2TwoForm& b);

}  // namespace kw
