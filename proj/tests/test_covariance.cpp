#include <doctest.h>

#include "gausslab/covariance.hpp"

using namespace gausslab;

TEST_CASE("squeezing parameter round-trips between chi and r") {
    const auto s = SqueezingParam::from_tanh(0.73);
    CHECK(std::abs(std::tanh(s.r()) - s.chi()) <= 1e-12);
    const auto t = SqueezingParam::from_r(1.3);
    CHECK(std::abs(std::tanh(1.3) - t.chi()) <= 1e-15);
    CHECK_THROWS_AS(SqueezingParam::from_tanh(1.0), std::domain_error);
    CHECK_THROWS_AS(SqueezingParam::from_tanh(-0.1), std::domain_error);
    CHECK_THROWS_AS(SqueezingParam::from_r(-1.0), std::domain_error);
}

TEST_CASE("tmsv covariance entries") {
    SUBCASE("zero squeezing gives two vacua") {
        const auto v = tmsv(SqueezingParam::from_tanh(0.0));
        CHECK(v.a == 1.0);
        CHECK(v.b == 1.0);
        CHECK(v.c1 == 0.0);
        CHECK(v.c2 == 0.0);
    }
    SUBCASE("chi = 0.5") {
        // cross-checked against the number-basis second moments in test_fock
        const auto v = tmsv(SqueezingParam::from_tanh(0.5));
        CHECK(v.a == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
        CHECK(v.b == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
        CHECK(v.c1 == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK(v.c2 == doctest::Approx(-4.0 / 3.0).epsilon(1e-14));
        CHECK(v.is_balanced());
    }
    SUBCASE("domain boundary") {
        const auto big = tmsv(SqueezingParam::from_tanh(0.9999));
        CHECK(std::isfinite(big.a));
        CHECK(big.a > 1e3);
    }
}

TEST_CASE("symplectic eigenvalues") {
    SUBCASE("vacuum and thermal products") {
        const auto vac = symplectic_eigenvalues(TwoModeCovariance{1, 1, 0, 0});
        CHECK(vac.nu_minus == doctest::Approx(1.0));
        CHECK(vac.nu_plus == doctest::Approx(1.0));
        const auto th = symplectic_eigenvalues(TwoModeCovariance{2, 2, 0, 0});
        CHECK(th.nu_minus == doctest::Approx(2.0));
        CHECK(th.nu_plus == doctest::Approx(2.0));
    }
    SUBCASE("tmsv is pure across a chi grid") {
        for (int i = 0; i <= 19; ++i) {
            const double chi = 0.95 * i / 19.0;
            const auto spec = symplectic_eigenvalues(tmsv(SqueezingParam::from_tanh(chi)));
            CHECK(std::abs(spec.nu_minus - 1.0) <= 1e-9);
            CHECK(std::abs(spec.nu_plus - 1.0) <= 1e-9);
        }
    }
    SUBCASE("closed form agrees with the invariant route for balanced states") {
        for (int i = 0; i < 40; ++i) {
            const double a = 1.0 + 0.17 * i;
            const double b = 1.0 + 0.11 * i;
            const double cmax = std::sqrt((a - 1.0) * (b - 1.0));
            const double c = 0.9 * cmax * (i % 5) / 4.0;
            const auto s1 = symplectic_eigenvalues(TwoModeCovariance{a, b, c, -c});
            // invariant route, written out
            const double delta = a * a + b * b - 2.0 * c * c;
            const double det = (a * b - c * c) * (a * b - c * c);
            const double root = std::sqrt(std::max(delta * delta - 4.0 * det, 0.0));
            const double lo = std::sqrt((delta - root) / 2.0), hi = std::sqrt((delta + root) / 2.0);
            CHECK(std::abs(s1.nu_minus - lo) <= 1e-10 * hi);
            CHECK(std::abs(s1.nu_plus - hi) <= 1e-10 * hi);
        }
    }
    SUBCASE("ordering") {
        const auto s = symplectic_eigenvalues(TwoModeCovariance{3.0, 1.5, 0.7, -0.4});
        CHECK(s.nu_minus <= s.nu_plus);
    }
}

TEST_CASE("physicality") {
    CHECK(is_physical(TwoModeCovariance{1, 1, 0, 0}));
    CHECK(is_physical(tmsv(SqueezingParam::from_tanh(0.7))));
    // nu_minus < 1 for these correlations on vacuum diagonals
    CHECK_FALSE(is_physical(TwoModeCovariance{1, 1, 0.5, -0.5}));
    CHECK_FALSE(is_physical(TwoModeCovariance{-2, -2, 0, 0}));

    SUBCASE("scaling a physical state up stays physical") {
        const auto base = tmsv(SqueezingParam::from_tanh(0.4));
        for (double s : {1.0, 1.3, 2.0, 10.0}) {
            const TwoModeCovariance scaled{s * base.a, s * base.b, s * base.c1, s * base.c2};
            CHECK(is_physical(scaled));
        }
    }
}

TEST_CASE("mean energy per mode") {
    CHECK(mean_energy_per_mode(TwoModeCovariance{1, 1, 0, 0}) == doctest::Approx(0.0));
    CHECK(mean_energy_per_mode(TwoModeCovariance{3, 3, 0, 0}) == doctest::Approx(1.0));
    for (double chi : {0.1, 0.5, 0.8}) {
        const double expected = chi * chi / (1.0 - chi * chi);  // sinh^2 r
        CHECK(mean_energy_per_mode(tmsv(SqueezingParam::from_tanh(chi)))
              == doctest::Approx(expected).epsilon(1e-12));
    }
}
