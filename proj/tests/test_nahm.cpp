#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kw/nahm.hpp"
#include "kw/rng.hpp"

using namespace kw;

TEST_CASE("su(2) triple satisfies the epsilon bracket") {
    const auto t = nahm_triple();
    CHECK((commutator(t[0], t[1]) - t[2]).norm() < 1e-15);
    CHECK((commutator(t[1], t[2]) - t[0]).norm() < 1e-15);
    CHECK((commutator(t[2], t[0]) - t[1]).norm() < 1e-15);
}

TEST_CASE("sphere frame is orthonormal and tangent") {
    SplitMix64 rng(51);
    for (int n = 0; n < 20; ++n) {
        const Quaternion x = rng.unit_quaternion();
        const SphereFrame fr = frame(x);
        const auto xc = x.coords();
        for (int a = 0; a < 3; ++a) {
            double na = 0.0, radial = 0.0;
            for (int i = 0; i < 4; ++i) {
                na += fr.e[a][i] * fr.e[a][i];
                radial += fr.e[a][i] * xc[i];
            }
            CHECK(na == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(radial) < 1e-12);
            for (int b = a + 1; b < 3; ++b) {
                double d = 0.0;
                for (int i = 0; i < 4; ++i) d += fr.e[a][i] * fr.e[b][i];
                CHECK(std::abs(d) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(frame(Quaternion{2, 0, 0, 0}), InvalidParameterError);
}

TEST_CASE("coframe decomposition of the canonical one-form") {
    SplitMix64 rng(52);
    for (int n = 0; n < 50; ++n) {
        CHECK(frame_decomposition_residual(rng.unit_quaternion()) < 1e-12);
    }
}

TEST_CASE("pullback profiles match the contraction of the Euclidean field") {
    SplitMix64 rng(53);
    for (CylinderSolution which : {CylinderSolution::PlusHalf, CylinderSolution::MinusHalf}) {
        for (double y : {0.2, 0.7, 1.5, 3.0}) {
            // y = 0 maps to the pole sphere t = 1 of the C = 1 profiles;
            // these y stay clear of it.
            const auto [a, p] = pullback_profiles(which, y);
            const auto [av, pv] = pullback_via_field(which, y, rng.unit_quaternion());
            CHECK(av == doctest::Approx(a).epsilon(1e-11));
            CHECK(pv == doctest::Approx(p).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(pullback_profiles(CylinderSolution::PlusHalf, -0.5), InvalidParameterError);
}

TEST_CASE("Nahm pole residual is linear in y near the boundary") {
    for (CylinderSolution which : {CylinderSolution::PlusHalf, CylinderSolution::MinusHalf}) {
        for (double y : {1e-2, 1e-3, 1e-4}) {
            CHECK(nahm_pole_residual(which, y) <= 5.0 * y);
        }
    }
}

TEST_CASE("profiles decay like e^{-4y} into the cylinder") {
    for (CylinderSolution which : {CylinderSolution::PlusHalf, CylinderSolution::MinusHalf}) {
        const double slope_p = log_slope(
            [which](double y) { return std::abs(pullback_profiles(which, y).second); }, 5.0,
            10.0, 32);
        CHECK(slope_p == doctest::Approx(-4.0).epsilon(0.0025));
    }
    // a decays at the same rate on the decaying branch.
    const double slope_a = log_slope(
        [](double y) { return std::abs(pullback_profiles(CylinderSolution::PlusHalf, y).first); },
        5.0, 10.0, 32);
    CHECK(slope_a == doctest::Approx(-4.0).epsilon(0.0025));
}

TEST_CASE("half-instanton numbers") {
    CHECK(cylinder_instanton(CylinderSolution::PlusHalf, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cylinder_instanton(CylinderSolution::MinusHalf, 1.0) ==
          doctest::Approx(-0.5).epsilon(1e-12));
    // Scale invariance of the two halves.
    for (double C : {0.5, 2.0}) {
        CHECK(cylinder_instanton(CylinderSolution::PlusHalf, C) == doctest::Approx(0.5));
        CHECK(cylinder_instanton(CylinderSolution::MinusHalf, C) == doctest::Approx(-0.5));
    }
    CHECK_THROWS_AS(cylinder_instanton(CylinderSolution::PlusHalf, -1.0), InvalidParameterError);
}
