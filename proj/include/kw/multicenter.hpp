#pragma once

// Multi-center generalization: fields built from |U|^2 = sum lambda_i^2
// |x - b_i|^2 and the 1-form Im(U* dU), plus the algebraic identities that
// make them solve the full equations.

#include <string>
#include <utility>
#include <vector>

#include "kw/families.hpp"
#include "kw/fdcheck.hpp"

namespace kw {

struct CenterData {
    std::vector<double> lambdas;
    std::vector<Quaternion> centers;

    // Throws InvalidParameterError unless k >= 1, sizes match, and some
    // lambda_i is nonzero.
    void validate() const;
};

// |U(x)|^2.
double u_norm_sq(const CenterData& cd, const Quaternion& x);

// Component j = sum_i lambda_i^2 im((conj(x) - conj(b_i)) e_j).
Su2OneForm u_star_du(const CenterData& cd, const Quaternion& x);

// (A, phi) = (f(|U|^2), g(|U|^2)) scaled copies of Im(U* dU). Rejects x
// within kMulticenterGuard of a profile pole measured in |U|^2.
std::pair<Su2OneForm, Su2OneForm> multicenter_field(const CenterData& cd,
                                                    const SolutionFamily& fam,
                                                    const Quaternion& x);

inline constexpr double kMulticenterGuard = 1e-4;

// Sampler over the multi-center field with the |U|^2 pole guard widened to
// guard_band, suitable for the FD residual and order scans.
FieldSampler multicenter_sampler(const CenterData& cd, const SolutionFamily& fam,
                                 double guard_band = 0.05);

// FD density of d(star phi) + A ^ star phi + star phi ^ A; O(h^2) small for
// the fields above.
double dastar_phi_multicenter_residual(const CenterData& cd, const SolutionFamily& fam,
                                       const Quaternion& x, double h);

// The vanishing sum behind the U-map computation: for centers i, l,
// sum_j [ (x - b_l)_j im((conj(x) - conj(b_i)) e_j)
//       + (x - b_i)_j im((conj(x) - conj(b_l)) e_j) ]; identically 0.
ImQuaternion antisymmetry_residual(const CenterData& cd, const Quaternion& x,
                                   std::size_t i, std::size_t l);

// Norm of the 4-form Im(f U* dU) ^ star Im(g U* dU); identically 0.
double orthogonality_residual(const CenterData& cd, const SolutionFamily& fam,
                              const Quaternion& x);

// Numerical shell quadrature of the 4D trace density over |x| <= r_max,
// centered at the weighted centroid; the instanton number of multi-center
// fields has no closed form, so the value is reported with an error bar.
struct ConjecturalInstanton {
    double k = 0.0;
    double error_bar = 0.0;
};
ConjecturalInstanton multicenter_instanton(const CenterData& cd, const SolutionFamily& fam,
                                           double r_max, int radial_samples = 96,
                                           int sphere_samples = 128, unsigned long long seed = 1);

// JSON of the form {"lambdas": [...], "centers": [[w,x,y,z], ...], "C": c};
// returns the data and C.
std::pair<CenterData, double> parse_center_data(const std::string& json_text);
std::string center_data_json(const CenterData& cd, double C);

}  // namespace kw
