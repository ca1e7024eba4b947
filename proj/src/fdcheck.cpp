#include "kw/fdcheck.hpp"

#include <algorithm>
#include <cmath>

namespace kw {

namespace {

Quaternion offset(const Quaternion& x, int i, double d) {
    Quaternion r = x;
    switch (i) {
        case 0: r.w += d; break;
        case 1: r.x += d; break;
        case 2: r.y += d; break;
        case 3: r.z += d; break;
    }
    return r;
}

void require_ball(const FieldSampler& s, const Quaternion& x, double h) {
    for (int i = 0; i < 4; ++i) {
        if (!s.admissible(offset(x, i, 2.0 * h)) || !s.admissible(offset(x, i, -2.0 * h))) {
            throw SingularityError("FD stencil leaves the admissible domain");
        }
    }
    if (!s.admissible(x)) throw SingularityError("FD stencil leaves the admissible domain");
}

// d of a 1-form sampler by centered differences: component (i,j) is
// d_i w_j - d_j w_i.
Su2TwoForm fd_exterior_d(const std::function<Su2OneForm(const Quaternion&)>& w,
                         const Quaternion& x, double h) {
    std::array<Su2OneForm, 4> dplus, dminus;
    for (int i = 0; i < 4; ++i) {
        dplus[i] = w(offset(x, i, h));
        dminus[i] = w(offset(x, i, -h));
    }
    Su2TwoForm r;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const ImQuaternion didj = (dplus[i].c[j] - dminus[i].c[j]) * (0.5 / h);
            const ImQuaternion djdi = (dplus[j].c[i] - dminus[j].c[i]) * (0.5 / h);
            r.c[Su2TwoForm::index(i + 1, j + 1)] = didj - djdi;
        }
    }
    return r;
}

}  // namespace

double default_step(const Quaternion& x) { return 1e-3 * std::max(1.0, x.norm()); }

FieldSampler sampler_for(const SolutionFamily& fam, double guard_band) {
    const RadialProfile p = profile(fam);
    FieldSampler s;
    s.A = [p](const Quaternion& x) { return eval_connection(p, x); };
    s.phi = [p](const Quaternion& x) { return eval_higgs(p, x); };
    std::vector<double> poles = p.singular_t;
    if (fam.tag == FamilyTag::GluedPlus || fam.tag == FamilyTag::ConjGluedMinus) {
        // The gluing sphere is only C^1; exclude it even though f, g are
        // finite there.
        if (fam.C != 0.0) poles.push_back(1.0 / fam.C);
    }
    s.admissible = [poles, guard_band](const Quaternion& x) {
        const double t = x.norm_sq();
        for (double sp : poles) {
            if (std::abs(t - sp) < guard_band) return false;
        }
        return true;
    };
    // The conjugate ansatz is the pullback under x -> conj(x), which is
    // orientation-reversing: it flips the sign of star on 2-forms, so the
    // mirror ODE system pairs with the plain Asd projection and vice versa.
    const bool conj = uses_conjugate_ansatz(fam.tag);
    switch (governing_system(fam.tag)) {
        case Governing::KwLambdaMinusOne:
            s.mode = conj ? KwMode::KwConj : KwMode::Kw;
            break;
        case Governing::AsdLambdaZero: s.mode = conj ? KwMode::AsdMirror : KwMode::Asd; break;
        case Governing::AsdLambdaZeroMirror: s.mode = conj ? KwMode::Asd : KwMode::AsdMirror; break;
        case Governing::None: s.mode = KwMode::Kw; break;
    }
    return s;
}

Su2TwoForm fd_curvature(const FieldSampler& s, const Quaternion& x, double h) {
    require_ball(s, x, h);
    const Su2OneForm a = s.A(x);
    return fd_exterior_d(s.A, x, h) + wedge_one_one(a, a);
}

Su2TwoForm fd_da_phi(const FieldSampler& s, const Quaternion& x, double h) {
    require_ball(s, x, h);
    const Su2OneForm a = s.A(x);
    const Su2OneForm phi = s.phi(x);
    return fd_exterior_d(s.phi, x, h) + wedge_one_one(a, phi) + wedge_one_one(phi, a);
}

ImQuaternion fd_dastar_phi(const FieldSampler& s, const Quaternion& x, double h) {
    require_ball(s, x, h);
    const Metric m = Metric::euclidean();
    ImQuaternion d_star;
    for (int i = 0; i < 4; ++i) {
        const Quaternion xp = offset(x, i, h), xm = offset(x, i, -h);
        const Su2ThreeForm sp = hodge_star_1(s.phi(xp), m, xp.norm_sq());
        const Su2ThreeForm sm = hodge_star_1(s.phi(xm), m, xm.norm_sq());
        d_star += (sp.c[i] - sm.c[i]) * (kOrient3[i] * 0.5 / h);
    }
    const Su2OneForm a = s.A(x);
    const Su2ThreeForm star_phi = hodge_star_1(s.phi(x), m, x.norm_sq());
    return d_star + wedge_one_three(a, star_phi) + wedge_three_one(star_phi, a);
}

ResidualReport kw_residual_4d(const FieldSampler& s, const Quaternion& x, double h) {
    ResidualReport rep;
    rep.h = h;

    auto r_kw_at = [&s, &x](double hh) {
        const Su2TwoForm curv = fd_curvature(s, x, hh);
        const Su2OneForm phi = s.phi(x);
        const Su2TwoForm pp = wedge_one_one(phi, phi);
        const Su2TwoForm dap = fd_da_phi(s, x, hh);
        switch (s.mode) {
            case KwMode::Kw:
                return std::sqrt((curv - pp - hodge_star_2(dap)).norm_sq());
            case KwMode::KwConj:
                return std::sqrt((curv - pp + hodge_star_2(dap)).norm_sq());
            case KwMode::Asd: {
                const auto [fp, fm] = sd_asd_split(curv - pp);
                const auto [dp, dm] = sd_asd_split(dap);
                (void)fm; (void)dp;
                return std::sqrt(fp.norm_sq() + dm.norm_sq());
            }
            case KwMode::AsdMirror: {
                const auto [fp, fm] = sd_asd_split(curv - pp);
                const auto [dp, dm] = sd_asd_split(dap);
                (void)fp; (void)dm;
                return std::sqrt(fm.norm_sq() + dp.norm_sq());
            }
        }
        return 0.0;
    };

    rep.r_kw = r_kw_at(h);
    rep.r_div = fd_dastar_phi(s, x, h).norm();
    const double r_half = r_kw_at(0.5 * h);
    rep.order_estimate = (rep.r_kw > 0.0 && r_half > 0.0)
                             ? std::log2(rep.r_kw / r_half)
                             : 2.0;  // residual at rounding floor
    return rep;
}

double order_scan(const FieldSampler& s, const std::vector<Quaternion>& points, double h0) {
    if (points.size() < 5) throw InvalidParameterError("order_scan needs at least 5 points");
    std::vector<double> orders;
    orders.reserve(points.size());
    for (const Quaternion& x : points) {
        const ResidualReport r0 = kw_residual_4d(s, x, h0);
        const ResidualReport r2 = kw_residual_4d(s, x, 0.25 * h0);
        if (r0.r_kw <= 0.0 || r2.r_kw <= 0.0) {
            orders.push_back(2.0);
            continue;
        }
        orders.push_back(0.5 * std::log2(r0.r_kw / r2.r_kw));
    }
    std::nth_element(orders.begin(), orders.begin() + orders.size() / 2, orders.end());
    return orders[orders.size() / 2];
}

}  // namespace kw
