#include "kw/multicenter.hpp"

#include <cmath>

#include <json.hpp>

#include "kw/fdcheck.hpp"
#include "kw/rng.hpp"

namespace kw {

void CenterData::validate() const {
    if (lambdas.empty() || lambdas.size() != centers.size()) {
        throw InvalidParameterError("CenterData needs k >= 1 matched lambdas and centers");
    }
    bool nonzero = false;
    for (double l : lambdas) nonzero = nonzero || l != 0.0;
    if (!nonzero) throw InvalidParameterError("all lambdas are zero; the field degenerates");
}

double u_norm_sq(const CenterData& cd, const Quaternion& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < cd.lambdas.size(); ++i) {
        s += cd.lambdas[i] * cd.lambdas[i] * (x - cd.centers[i]).norm_sq();
    }
    return s;
}

Su2OneForm u_star_du(const CenterData& cd, const Quaternion& x) {
    Su2OneForm r;
    for (std::size_t i = 0; i < cd.lambdas.size(); ++i) {
        const double l2 = cd.lambdas[i] * cd.lambdas[i];
        const Quaternion d = (x - cd.centers[i]).conj();
        for (int j = 0; j < 4; ++j) {
            r.c[j] += (d * Quaternion::unit(j)).im() * l2;
        }
    }
    return r;
}

std::pair<Su2OneForm, Su2OneForm> multicenter_field(const CenterData& cd,
                                                    const SolutionFamily& fam,
                                                    const Quaternion& x) {
    cd.validate();
    const RadialProfile p = profile(fam);
    const double t = u_norm_sq(cd, x);
    for (double s : p.singular_t) {
        if (std::abs(t - s) < kMulticenterGuard) {
            throw SingularityError("|U|^2 within guard distance of a profile pole");
        }
    }
    const Su2OneForm base = u_star_du(cd, x);
    return {base * p.f(t), base * p.g(t)};
}

FieldSampler multicenter_sampler(const CenterData& cd, const SolutionFamily& fam,
                                 double guard_band) {
    cd.validate();
    FieldSampler s;
    s.A = [cd, fam](const Quaternion& y) { return multicenter_field(cd, fam, y).first; };
    s.phi = [cd, fam](const Quaternion& y) { return multicenter_field(cd, fam, y).second; };
    const RadialProfile p = profile(fam);
    s.admissible = [cd, p, guard_band](const Quaternion& y) {
        const double t = u_norm_sq(cd, y);
        for (double sp : p.singular_t) {
            if (std::abs(t - sp) < guard_band) return false;
        }
        return true;
    };
    s.mode = sampler_for(fam).mode;
    return s;
}

double dastar_phi_multicenter_residual(const CenterData& cd, const SolutionFamily& fam,
                                       const Quaternion& x, double h) {
    return fd_dastar_phi(multicenter_sampler(cd, fam, kMulticenterGuard), x, h).norm();
}

ImQuaternion antisymmetry_residual(const CenterData& cd, const Quaternion& x,
                                   std::size_t i, std::size_t l) {
    if (i >= cd.centers.size() || l >= cd.centers.size()) {
        throw InvalidParameterError("center index out of range");
    }
    const Quaternion di = x - cd.centers[i];
    const Quaternion dl = x - cd.centers[l];
    const auto ci = di.coords();
    const auto cl = dl.coords();
    ImQuaternion r;
    for (int j = 0; j < 4; ++j) {
        r += (di.conj() * Quaternion::unit(j)).im() * cl[j];
        r += (dl.conj() * Quaternion::unit(j)).im() * ci[j];
    }
    return r;
}

double orthogonality_residual(const CenterData& cd, const SolutionFamily& fam,
                              const Quaternion& x) {
    const auto [a, phi] = multicenter_field(cd, fam, x);
    const Su2ThreeForm star_phi = hodge_star_1(phi, Metric::euclidean(), x.norm_sq());
    return wedge_one_three(a, star_phi).norm();
}

ConjecturalInstanton multicenter_instanton(const CenterData& cd, const SolutionFamily& fam,
                                           double r_max, int radial_samples,
                                           int sphere_samples, unsigned long long seed) {
    cd.validate();
    if (!(r_max > 0.0) || radial_samples < 4 || sphere_samples < 4) {
        throw InvalidParameterError("multicenter_instanton: bad sampling parameters");
    }
    FieldSampler s;
    s.A = [&cd, &fam](const Quaternion& y) { return multicenter_field(cd, fam, y).first; };
    s.phi = s.A;  // unused; curvature only
    const RadialProfile p = profile(fam);
    s.admissible = [&cd, p](const Quaternion& y) {
        const double t = u_norm_sq(cd, y);
        for (double sp : p.singular_t) {
            if (std::abs(t - sp) < 4.0 * kMulticenterGuard) return false;
        }
        return true;
    };

    // Weighted centroid of the centers.
    Quaternion c0;
    double wsum = 0.0;
    for (std::size_t i = 0; i < cd.lambdas.size(); ++i) {
        const double w = cd.lambdas[i] * cd.lambdas[i];
        c0 = c0 + cd.centers[i] * w;
        wsum += w;
    }
    c0 = c0 * (1.0 / wsum);

    constexpr double kPi = 3.14159265358979323846;
    SplitMix64 rng(seed);
    double total = 0.0, var_acc = 0.0;
    const double dr = r_max / radial_samples;
    for (int ir = 0; ir < radial_samples; ++ir) {
        const double r = (ir + 0.5) * dr;
        double mean = 0.0, m2 = 0.0;
        int kept = 0;
        for (int is = 0; is < sphere_samples; ++is) {
            const Quaternion x = c0 + rng.unit_quaternion() * r;
            double d = 0.0;
            try {
                const Su2TwoForm curv = fd_curvature(s, x, default_step(x));
                d = fourform_trace_density(curv, curv);
            } catch (const SingularityError&) {
                continue;  // near the gluing hypersurface; measure-zero slice
            }
            ++kept;
            const double delta = d - mean;
            mean += delta / kept;
            m2 += delta * (d - mean);
        }
        if (kept == 0) continue;
        const double shell = 2.0 * kPi * kPi * r * r * r * dr;
        total += mean * shell;
        if (kept > 1) var_acc += (m2 / (kept - 1.0) / kept) * shell * shell;
    }
    ConjecturalInstanton out;
    out.k = total / (4.0 * kPi * kPi);
    out.error_bar = std::sqrt(var_acc) / (4.0 * kPi * kPi);
    return out;
}

std::pair<CenterData, double> parse_center_data(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    CenterData cd;
    for (const auto& l : j.at("lambdas")) cd.lambdas.push_back(l.get<double>());
    for (const auto& c : j.at("centers")) {
        if (!c.is_array() || c.size() != 4) {
            throw InvalidParameterError("each center must be a [w,x,y,z] quadruple");
        }
        cd.centers.push_back({c[0].get<double>(), c[1].get<double>(),
                              c[2].get<double>(), c[3].get<double>()});
    }
    cd.validate();
    return {cd, j.value("C", 1.0)};
}

std::string center_data_json(const CenterData& cd, double C) {
    nlohmann::json j;
    j["lambdas"] = cd.lambdas;
    j["centers"] = nlohmann::json::array();
    for (const auto& c : cd.centers) {
        j["centers"].push_back({c.w, c.x, c.y, c.z});
    }
    j["C"] = C;
    return j.dump();
}

}  // namespace kw
