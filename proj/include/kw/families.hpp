#pragma once

// Catalog of the closed-form solution families, with exact derivatives,
// singular loci, and the reduced system each family satisfies.

#include <string>
#include <utility>

#include "kw/radial.hpp"

namespace kw {

enum class FamilyTag {
    F1,              // f = 3C/((Ct)^2+4Ct+1), the decaying branch
    F2,              // f = (C^2t^2+Ct+1)/(t((Ct)^2+4Ct+1)), the 1/t branch
    GluedPlus,       // F1 for t <= 1/C glued C^1 to F2 for t >= 1/C
    ConjGluedMinus,  // the glued profile on the conjugate (x dxbar) ansatz
    THooft,          // (1/(1+t), 0), anti-self-dual
    AltAsd,          // (t/(t^2-1), sqrt(3)/(t^2-1)) on the conjugate ansatz
    Tan,             // (1/(2t), tan(-ln(t)/2 + C)/(2t)); dense poles, negative tests only
};

struct SolutionFamily {
    FamilyTag tag;
    double C = 1.0;
};

// Which reduced system the family's (f, g) satisfy identically.
enum class Governing {
    KwLambdaMinusOne,    // the lambda = -1 pair
    AsdLambdaZero,       // f' + f^2 - g^2 = 0, t g' + 2g - 2tfg = 0
    AsdLambdaZeroMirror, // the orientation-reversed lambda = 0 pair
    None,                // Tan: solves lambda = -1 formally but is cataloged
                         // only as a blow-up specimen
};

Governing governing_system(FamilyTag tag);
bool uses_conjugate_ansatz(FamilyTag tag);

std::string family_name(FamilyTag tag);
// Accepts the CLI spellings (f1, f2, glued_plus, conj_glued_minus, thooft,
// alt_asd, tan); throws InvalidParameterError otherwise.
FamilyTag parse_family(const std::string& name);

RadialProfile profile(const SolutionFamily& fam);

// Limits of ftilde = t f at t -> 0 and t -> infinity.
std::pair<double, double> ftilde_limits(const SolutionFamily& fam);

// (exact jump of ftilde across t = 1/C, difference of one-sided difference
// quotients of u = ftilde - 1/2 with step h). The first is identically 0,
// the second tends to 0 with h since u' has matching one-sided limits.
std::pair<double, double> glued_u_c1_check(double C, double h);

// The connection 1-form of the family on the conjugate x dxbar ansatz.
Su2OneForm conjugate_form(const SolutionFamily& fam, const Quaternion& x);

}  // namespace kw
