#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kw/families.hpp"
#include "kw/fdcheck.hpp"
#include "kw/rng.hpp"

using namespace kw;

namespace {
const std::vector<FamilyTag> kSmoothTags = {FamilyTag::F1,     FamilyTag::F2,
                                            FamilyTag::GluedPlus, FamilyTag::ConjGluedMinus,
                                            FamilyTag::THooft, FamilyTag::AltAsd};
}

TEST_CASE("family names round-trip and reject junk") {
    for (FamilyTag tag : kSmoothTags) CHECK(parse_family(family_name(tag)) == tag);
    CHECK(parse_family("tan") == FamilyTag::Tan);
    CHECK_THROWS_AS(parse_family("f3"), InvalidParameterError);
    CHECK_THROWS_AS(parse_family(""), InvalidParameterError);
}

TEST_CASE("closed-form derivative spot values") {
    const RadialProfile p1 = profile({FamilyTag::F1, 1.0});
    CHECK(static_cast<double>(p1.f(2.0)) == doctest::Approx(3.0 / 13.0).epsilon(1e-15));
    CHECK(static_cast<double>(p1.g(2.0)) == doctest::Approx(9.0 / 13.0).epsilon(1e-15));

    const RadialProfile p2 = profile({FamilyTag::F2, 1.0});
    CHECK(static_cast<double>(p2.f(2.0)) == doctest::Approx(7.0 / 26.0).epsilon(1e-15));
    CHECK(static_cast<double>(p2.fp(2.0)) == doctest::Approx(-73.0 / 676.0).epsilon(1e-15));
}

TEST_CASE("derivative fields match central differences") {
    SplitMix64 rng(21);
    for (FamilyTag tag : kSmoothTags) {
        const RadialProfile p = profile({tag, 1.0});
        for (int n = 0; n < 20; ++n) {
            const double t = rng.uniform(0.1, 5.0);
            if (p.near_singularity(t) || p.near_singularity(t + 1e-5) ||
                p.near_singularity(t - 1e-5)) {
                continue;
            }
            // For the glued profiles the stencil must not straddle the C^1 seam.
            if ((tag == FamilyTag::GluedPlus || tag == FamilyTag::ConjGluedMinus) &&
                std::abs(t - 1.0) < 1e-4) {
                continue;
            }
            const double h = 1e-5;
            const double fd_f = static_cast<double>(p.f(t + h) - p.f(t - h)) / (2.0 * h);
            const double fd_g = static_cast<double>(p.g(t + h) - p.g(t - h)) / (2.0 * h);
            CHECK(static_cast<double>(p.fp(t)) == doctest::Approx(fd_f).epsilon(1e-6));
            if (fd_g != 0.0) {
                CHECK(static_cast<double>(p.gp(t)) == doctest::Approx(fd_g).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("each family annihilates its governing reduced system") {
    SplitMix64 rng(22);
    for (FamilyTag tag : kSmoothTags) {
        for (double C : {0.5, 1.0, 2.0}) {
            if ((tag == FamilyTag::THooft || tag == FamilyTag::AltAsd) && C != 1.0) continue;
            const RadialProfile p = profile({tag, C});
            for (int n = 0; n < 50; ++n) {
                const double t = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
                if (p.near_singularity(t)) continue;
                std::pair<double, double> r{0.0, 0.0};
                switch (governing_system(tag)) {
                    case Governing::KwLambdaMinusOne: r = kw_ode_residual(p, -1.0, t); break;
                    case Governing::AsdLambdaZero: r = asd_ode_residual(p, t); break;
                    case Governing::AsdLambdaZeroMirror: r = asd_ode_residual_mirror(p, t); break;
                    case Governing::None: break;
                }
                CHECK(std::abs(r.first) < 1e-10);
                CHECK(std::abs(r.second) < 1e-10);
            }
        }
    }
}

TEST_CASE("lambda residual rejects lambda = 0 and guarded t") {
    const RadialProfile p = profile({FamilyTag::F1, 1.0});
    CHECK_THROWS_AS(kw_ode_residual(p, 0.0, 2.0), InvalidParameterError);
    CHECK_THROWS_AS(kw_ode_residual(p, -1.0, 1.0), SingularityError);
    CHECK_THROWS_AS(p.check(1.0 + 0.5 * RadialProfile::kGuard), SingularityError);
    CHECK_NOTHROW(p.check(1.0 + 2.0 * RadialProfile::kGuard));
}

TEST_CASE("reduced components reproduce the assembled two-forms via FD") {
    // Cross-check: the curvature assembled from the reduced scalar
    // coefficients equals dA + A^A computed by centered differences.
    SplitMix64 rng(23);
    const SolutionFamily fam{FamilyTag::F1, 1.0};
    const RadialProfile p = profile(fam);
    const FieldSampler s = sampler_for(fam);
    for (int n = 0; n < 10; ++n) {
        Quaternion x = rng.gaussian_quaternion();
        if (!s.admissible(x)) continue;
        const double h = 1e-4;
        const Su2TwoForm fd_f = fd_curvature(s, x, h);
        const Su2TwoForm cl_f = assemble_curvature(p, x);
        CHECK(std::sqrt((fd_f - cl_f).norm_sq()) < 1e-6 * std::max(1.0, std::sqrt(cl_f.norm_sq())));

        const Su2TwoForm fd_d = fd_da_phi(s, x, h);
        const Su2TwoForm cl_d = assemble_da_phi(p, x);
        CHECK(std::sqrt((fd_d - cl_d).norm_sq()) < 1e-6 * std::max(1.0, std::sqrt(cl_d.norm_sq())));

        const Su2OneForm phi = eval_higgs(p, x);
        const Su2TwoForm pp = wedge_one_one(phi, phi);
        const Su2TwoForm cl_p = assemble_phi_wedge_phi(p, x);
        CHECK(std::sqrt((pp - cl_p).norm_sq()) < 1e-10);
    }
}

TEST_CASE("d_A(star phi) vanishes for any conformal radial metric") {
    SplitMix64 rng(24);
    const RadialProfile p = profile({FamilyTag::F1, 1.0});
    for (const Metric& m : {Metric::euclidean(), Metric::round()}) {
        for (int n = 0; n < 10; ++n) {
            Quaternion x = rng.gaussian_quaternion();
            if (p.near_singularity(x.norm_sq())) continue;
            CHECK(dastar_phi_residual(p, m, x) < 1e-12);
        }
    }
}

TEST_CASE("glued profile is continuous with matching one-sided slopes") {
    for (double C : {0.5, 1.0, 2.0}) {
        const auto [jump, dq_1e3] = glued_u_c1_check(C, 1e-3);
        const auto [jump2, dq_1e4] = glued_u_c1_check(C, 1e-4);
        CHECK(jump == 0.0);
        CHECK(jump2 == 0.0);
        CHECK(std::abs(dq_1e3) <= 10.0 * 1e-3);
        CHECK(std::abs(dq_1e4) <= 10.0 * 1e-4);
    }
}

TEST_CASE("ftilde limits are equilibria of the boundary polynomial") {
    CHECK(ftilde_limits({FamilyTag::F1, 1.0}) == std::pair{0.0, 0.0});
    CHECK(ftilde_limits({FamilyTag::F2, 1.0}) == std::pair{1.0, 1.0});
    CHECK(ftilde_limits({FamilyTag::GluedPlus, 1.0}) == std::pair{0.0, 1.0});
    CHECK(ftilde_limits({FamilyTag::THooft, 1.0}) == std::pair{0.0, 1.0});
    CHECK_THROWS_AS(ftilde_limits({FamilyTag::Tan, 1.0}), InvalidParameterError);
}

TEST_CASE("C = 0 degenerates to the flat connection except on the 1/t branch") {
    const RadialProfile p = profile({FamilyTag::F1, 0.0});
    CHECK(static_cast<double>(p.f(3.0)) == 0.0);
    CHECK(static_cast<double>(p.g(3.0)) == 0.0);
    const RadialProfile q = profile({FamilyTag::F2, 0.0});
    CHECK(static_cast<double>(q.f(4.0)) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(static_cast<double>(q.g(4.0)) == 0.0);
    const auto r = kw_ode_residual(q, -1.0, 4.0);
    CHECK(std::abs(r.first) < 1e-15);
    CHECK(std::abs(r.second) < 1e-15);
}

TEST_CASE("blow-up specimen solves the system between its poles only") {
    const SolutionFamily fam{FamilyTag::Tan, 1.0};
    const RadialProfile p = profile(fam);
    CHECK(governing_system(fam.tag) == Governing::None);
    CHECK(p.singular_t.size() > 3);  // accumulating pole spheres
    // Between poles the pair formally satisfies the lambda = -1 system.
    const double t = 2.0;
    REQUIRE(!p.near_singularity(t));
    const auto r = kw_ode_residual(p, -1.0, t);
    CHECK(std::abs(r.first) < 1e-12);
    CHECK(std::abs(r.second) < 1e-12);
}
