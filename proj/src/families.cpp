#include "kw/families.hpp"

#include <cmath>

namespace kw {

namespace {

// Base (C = 1) closed forms; the C family is f_C(t) = C f(Ct) etc.

using real = long double;

real f1_base(real t) { return 3.0L / (t * t + 4.0L * t + 1.0L); }
real f1p_base(real t) {
    const real d = t * t + 4.0L * t + 1.0L;
    return -6.0L * (t + 2.0L) / (d * d);
}

// g shared by F1 and F2; simple pole at t = 1.
real g_base(real t) {
    return 3.0L * (t + 1.0L) / ((t * t + 4.0L * t + 1.0L) * (t - 1.0L));
}
real gp_base(real t) {
    const real p = (t - 1.0L) * (t * t + 4.0L * t + 1.0L);
    return -6.0L * (t * t * t + 3.0L * t * t + 3.0L * t - 1.0L) / (p * p);
}

real f2_base(real t) {
    return (t * t + t + 1.0L) / (t * (t * t + 4.0L * t + 1.0L));
}
real f2p_base(real t) {
    const real n = t * t + t + 1.0L;
    const real d = t * t * t + 4.0L * t * t + t;
    const real np = 2.0L * t + 1.0L;
    const real dp = 3.0L * t * t + 8.0L * t + 1.0L;
    return (np * d - n * dp) / (d * d);
}

RadialProfile scaled(double C, real (*f)(real), real (*fp)(real),
                     real (*g)(real), real (*gp)(real),
                     std::vector<double> singular, Ansatz a = Ansatz::XbarDx) {
    const real c = C;
    RadialProfile p;
    p.f = [c, f](real t) { return c * f(c * t); };
    p.fp = [c, fp](real t) { return c * c * fp(c * t); };
    p.g = [c, g](real t) { return c * g(c * t); };
    p.gp = [c, gp](real t) { return c * c * gp(c * t); };
    p.singular_t = std::move(singular);
    p.ansatz = a;
    return p;
}

real zero_fn(real) { return 0.0L; }

}  // namespace

Governing governing_system(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::F1:
        case FamilyTag::F2:
        case FamilyTag::GluedPlus:
        case FamilyTag::ConjGluedMinus:
            return Governing::KwLambdaMinusOne;
        case FamilyTag::THooft:
            return Governing::AsdLambdaZero;
        case FamilyTag::AltAsd:
            return Governing::AsdLambdaZeroMirror;
        case FamilyTag::Tan:
            return Governing::None;
    }
    return Governing::None;
}

bool uses_conjugate_ansatz(FamilyTag tag) {
    return tag == FamilyTag::ConjGluedMinus || tag == FamilyTag::AltAsd;
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::F1: return "f1";
        case FamilyTag::F2: return "f2";
        case FamilyTag::GluedPlus: return "glued_plus";
        case FamilyTag::ConjGluedMinus: return "conj_glued_minus";
        case FamilyTag::THooft: return "thooft";
        case FamilyTag::AltAsd: return "alt_asd";
        case FamilyTag::Tan: return "tan";
    }
    return "?";
}

FamilyTag parse_family(const std::string& name) {
    for (FamilyTag tag : {FamilyTag::F1, FamilyTag::F2, FamilyTag::GluedPlus,
                          FamilyTag::ConjGluedMinus, FamilyTag::THooft, FamilyTag::AltAsd,
                          FamilyTag::Tan}) {
        if (family_name(tag) == name) return tag;
    }
    throw InvalidParameterError("unknown family: " + name);
}

RadialProfile profile(const SolutionFamily& fam) {
    const double C = fam.C;
    switch (fam.tag) {
        case FamilyTag::F1:
            if (C == 0.0) return scaled(0.0, f1_base, f1p_base, g_base, gp_base, {});
            return scaled(C, f1_base, f1p_base, g_base, gp_base, {1.0 / C});
        case FamilyTag::F2:
            if (C == 0.0) {
                RadialProfile p;
                p.f = [](real t) { return 1.0L / t; };
                p.fp = [](real t) { return -1.0L / (t * t); };
                p.g = zero_fn;
                p.gp = zero_fn;
                p.singular_t = {0.0};
                p.f_singular_t = {0.0};
                return p;
            }
            {
                RadialProfile p = scaled(C, f2_base, f2p_base, g_base, gp_base, {0.0, 1.0 / C});
                p.f_singular_t = {0.0};
                return p;
            }
        case FamilyTag::GluedPlus:
        case FamilyTag::ConjGluedMinus: {
            const Ansatz a = fam.tag == FamilyTag::ConjGluedMinus ? Ansatz::XDxbar : Ansatz::XbarDx;
            if (C == 0.0) return scaled(0.0, f1_base, f1p_base, g_base, gp_base, {}, a);
            RadialProfile p;
            const double tc = 1.0 / C;
            const real c = C;
            p.f = [c, tc](real t) { return t <= tc ? c * f1_base(c * t) : c * f2_base(c * t); };
            p.fp = [c, tc](real t) { return t <= tc ? c * c * f1p_base(c * t) : c * c * f2p_base(c * t); };
            p.g = [c](real t) { return c * g_base(c * t); };
            p.gp = [c](real t) { return c * c * gp_base(c * t); };
            p.singular_t = {tc};
            p.ansatz = a;
            return p;
        }
        case FamilyTag::THooft: {
            RadialProfile p;
            p.f = [](real t) { return 1.0L / (1.0L + t); };
            p.fp = [](real t) { return -1.0L / ((1.0L + t) * (1.0L + t)); };
            p.g = zero_fn;
            p.gp = zero_fn;
            return p;
        }
        case FamilyTag::AltAsd: {
            RadialProfile p;
            p.f = [](real t) { return t / (t * t - 1.0L); };
            p.fp = [](real t) {
                const real d = t * t - 1.0L;
                return -(t * t + 1.0L) / (d * d);
            };
            p.g = [](real t) { return std::sqrt(3.0L) / (t * t - 1.0L); };
            p.gp = [](real t) {
                const real d = t * t - 1.0L;
                return -2.0L * std::sqrt(3.0L) * t / (d * d);
            };
            p.singular_t = {1.0};
            p.f_singular_t = {1.0};
            p.ansatz = Ansatz::XDxbar;
            return p;
        }
        case FamilyTag::Tan: {
            RadialProfile p;
            const real C0 = C;
            p.f = [](real t) { return 0.5L / t; };
            p.fp = [](real t) { return -0.5L / (t * t); };
            p.g = [C0](real t) { return std::tan(C0 - 0.5L * std::log(t)) / (2.0L * t); };
            p.gp = [C0](real t) {
                const real th = C0 - 0.5L * std::log(t);
                const real c = std::cos(th);
                return -(1.0L / (c * c) + 2.0L * std::tan(th)) / (4.0L * t * t);
            };
            // Poles of tan accumulate at t = 0; list the ones in a wide
            // working window together with t = 0 itself.
            p.singular_t = {0.0};
            p.f_singular_t = {0.0};
            const double span = std::log(1e9);
            const int k_lo = static_cast<int>(std::ceil((2.0 * C0 - M_PI - span) / (2.0 * M_PI)));
            const int k_hi = static_cast<int>(std::floor((2.0 * C0 - M_PI + span) / (2.0 * M_PI)));
            for (int k = k_lo; k <= k_hi; ++k) {
                p.singular_t.push_back(std::exp(2.0 * C0 - M_PI - 2.0 * M_PI * k));
            }
            return p;
        }
    }
    throw InvalidParameterError("unhandled family tag");
}

std::pair<double, double> ftilde_limits(const SolutionFamily& fam) {
    if (fam.C == 0.0 && fam.tag != FamilyTag::F2) return {0.0, 0.0};
    switch (fam.tag) {
        case FamilyTag::F1: return {0.0, 0.0};
        case FamilyTag::F2: return {1.0, 1.0};
        case FamilyTag::GluedPlus:
        case FamilyTag::ConjGluedMinus:
        case FamilyTag::THooft:
        case FamilyTag::AltAsd:
            return {0.0, 1.0};
        case FamilyTag::Tan:
            throw InvalidParameterError("tan family has no ftilde limits");
    }
    throw InvalidParameterError("unhandled family tag");
}

std::pair<double, double> glued_u_c1_check(double C, double h) {
    const SolutionFamily fam{FamilyTag::GluedPlus, C};
    const RadialProfile p = profile(fam);
    const double tc = 1.0 / C;
    // Branch values straight from the closed forms, not through the
    // piecewise selector (which ties at t = tc).
    const double left = tc * C * f1_base(C * tc);
    const double right = tc * C * f2_base(C * tc);
    const double jump_ftilde = right - left;

    auto u = [&p](double t) { return t * p.f(t) - 0.5; };
    const double dq_right = (u(tc + h) - u(tc)) / h;
    const double dq_left = (u(tc) - u(tc - h)) / h;
    return {jump_ftilde, dq_right - dq_left};
}

Su2OneForm conjugate_form(const SolutionFamily& fam, const Quaternion& x) {
    RadialProfile p = profile(fam);
    p.ansatz = Ansatz::XDxbar;
    return eval_connection(p, x);
}

}  // namespace kw
