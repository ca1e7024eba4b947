#include "kw/forms.hpp"

namespace kw {

namespace {

// Pairs making up each 2-form component, 1-based.
constexpr int kPairI[6] = {1, 1, 1, 2, 2, 3};
constexpr int kPairJ[6] = {2, 3, 4, 3, 4, 4};

}  // namespace

Su2TwoForm wedge_one_one(const Su2OneForm& a, const Su2OneForm& b) {
    Su2TwoForm r;
    for (int k = 0; k < 6; ++k) {
        const int i = kPairI[k] - 1, j = kPairJ[k] - 1;
        const Quaternion q = a.c[i].embed() * b.c[j].embed() - a.c[j].embed() * b.c[i].embed();
        r.c[k] = q.im();
    }
    return r;
}

std::pair<Su2TwoForm, Su2TwoForm> sd_asd_split(const Su2TwoForm& w) {
    // SD basis: dx12+dx34, dx13-dx24, dx14+dx23.  ASD flips the second sign
    // in each pair.  Component order: 12,13,14,23,24,34.
    Su2TwoForm sd, asd;
    const ImQuaternion p12 = (w.c[0] + w.c[5]) * 0.5;  // (12,34)
    const ImQuaternion m12 = (w.c[0] - w.c[5]) * 0.5;
    const ImQuaternion p13 = (w.c[1] - w.c[4]) * 0.5;  // (13,-24)
    const ImQuaternion m13 = (w.c[1] + w.c[4]) * 0.5;
    const ImQuaternion p14 = (w.c[2] + w.c[3]) * 0.5;  // (14,23)
    const ImQuaternion m14 = (w.c[2] - w.c[3]) * 0.5;
    sd.c[0] = p12; sd.c[5] = p12;
    sd.c[1] = p13; sd.c[4] = -p13;
    sd.c[2] = p14; sd.c[3] = p14;
    asd.c[0] = m12; asd.c[5] = -m12;
    asd.c[1] = m13; asd.c[4] = m13;
    asd.c[2] = m14; asd.c[3] = -m14;
    return {sd, asd};
}

Su2TwoForm hodge_star_2(const Su2TwoForm& w) {
    // star dx12 = dx34, star dx13 = -dx24, star dx14 = dx23, and back with
    // the same signs.
    Su2TwoForm r;
    r.c[0] = w.c[5];
    r.c[5] = w.c[0];
    r.c[1] = -w.c[4];
    r.c[4] = -w.c[1];
    r.c[2] = w.c[3];
    r.c[3] = w.c[2];
    return r;
}

Su2ThreeForm hodge_star_1(const Su2OneForm& w, const Metric& m, double t) {
    const double h = m.h(t);
    const double h2 = h * h;
    Su2ThreeForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = w.c[i] * (h2 * kOrient3[i]);
    return r;
}

Su2OneForm hodge_star_3(const Su2ThreeForm& w, const Metric& m, double t) {
    // star(omit-i 3-form) = -sign_i dx_i / h^2.
    const double h = m.h(t);
    const double h2 = h * h;
    Su2OneForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = w.c[i] * (-kOrient3[i] / h2);
    return r;
}

ImQuaternion wedge_one_three(const Su2OneForm& a, const Su2ThreeForm& b) {
    // dx_i ^ (omit-i 3-form) = sign_i dVol, same sign pattern as star_1.
    ImQuaternion r;
    for (int i = 0; i < 4; ++i) {
        const Quaternion q = a.c[i].embed() * b.c[i].embed();
        r += q.im() * kOrient3[i];
    }
    return r;
}

ImQuaternion wedge_three_one(const Su2ThreeForm& a, const Su2OneForm& b) {
    // (omit-i 3-form) ^ dx_i = -sign_i dVol.
    ImQuaternion r;
    for (int i = 0; i < 4; ++i) {
        const Quaternion q = a.c[i].embed() * b.c[i].embed();
        r += q.im() * (-kOrient3[i]);
    }
    return r;
}

double fourform_trace_density(const Su2TwoForm& w1, const Su2TwoForm& w2) {
    // dx12^dx34 = +dVol, dx13^dx24 = -dVol, dx14^dx23 = +dVol; both orders
    // of each complementary pair contribute.
    return dot(w1.c[0], w2.c[5]) + dot(w1.c[5], w2.c[0])
         - dot(w1.c[1], w2.c[4]) - dot(w1.c[4], w2.c[1])
         + dot(w1.c[2], w2.c[3]) + dot(w1.c[3], w2.c[2]);
}

QuatTwoForm wedge(const QuatOneForm& a, const QuatOneForm& b) {
    QuatTwoForm r;
    for (int k = 0; k < 6; ++k) {
        const int i = kPairI[k] - 1, j = kPairJ[k] - 1;
        r.c[k] = a.c[i] * b.c[j] - a.c[j] * b.c[i];
    }
    return r;
}

QuatOneForm xbar_dx(const Quaternion& x) {
    QuatOneForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = x.conj() * Quaternion::unit(i);
    return r;
}

QuatOneForm dxbar_x(const Quaternion& x) {
    QuatOneForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = Quaternion::unit(i).conj() * x;
    return r;
}

QuatOneForm x_dxbar(const Quaternion& x) {
    QuatOneForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = x * Quaternion::unit(i).conj();
    return r;
}

QuatOneForm dx_form() {
    QuatOneForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = Quaternion::unit(i);
    return r;
}

QuatOneForm dxbar_form() {
    QuatOneForm r;
    for (int i = 0; i < 4; ++i) r.c[i] = Quaternion::unit(i).conj();
    return r;
}

Su2TwoForm basis_sd_form(const Quaternion& x) {
    return wedge(xbar_dx(x), dxbar_x(x)).im();
}

Su2TwoForm basis_asd_form() {
    return wedge(dxbar_form(), dx_form()).im();
}

double inner(const Su2TwoForm& a, const Su2TwoForm& b) {
    double s = 0;
    for (int i = 0; i < 6; ++i) s += dot(a.c[i], b.c[i]);
    return s;
}

}  // namespace kw
