#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gausslab/fidelity.hpp"

using namespace gausslab;

namespace {

/// Test-only oracle: single-mode squeezed vacuum in the number basis.
std::vector<double> squeezed_vacuum_fock(double r, int cutoff) {
    std::vector<double> amp(cutoff + 1, 0.0);
    const double th = std::tanh(r);
    double logfact = 0.0;  // log(m!)
    for (int m = 0; m <= cutoff; ++m) {
        if (m > 0) logfact += std::log(static_cast<double>(m));
        if (m % 2 == 0) {
            const int k = m / 2;
            double logk = 0.0;
            for (int i = 1; i <= k; ++i) logk += std::log(static_cast<double>(i));
            const double mag = std::exp(0.5 * logfact - k * std::log(2.0) - logk)
                               * std::pow(th, k);
            amp[m] = ((k % 2 == 0) ? mag : -mag) / std::sqrt(std::cosh(r));
        }
    }
    return amp;
}

}  // namespace

TEST_CASE("squeezed vacuum preparation") {
    const auto vac = squeezed_vacuum(SqueezingParam::from_tanh(0.0));
    CHECK(vac.vx == doctest::Approx(1.0));
    CHECK(vac.vp == doctest::Approx(1.0));
    const auto s = squeezed_vacuum(SqueezingParam::from_tanh(0.8));
    CHECK(s.vx == doctest::Approx(9.0).epsilon(1e-12));  // e^{2 artanh 0.8} = 9
    CHECK(s.vx * s.vp == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-mode channel action") {
    const auto s = squeezed_vacuum(SqueezingParam::from_tanh(0.8));
    const auto same = apply_channel_1mode(s, Channel::identity());
    CHECK(same.vx == doctest::Approx(s.vx));
    const auto vac_out = apply_channel_1mode(SingleModeGaussian{1.0, 1.0}, Channel{0.3, 0.7});
    CHECK(vac_out.vx == doctest::Approx(1.0));
    CHECK(vac_out.vp == doctest::Approx(1.0));
    const auto out = apply_channel_1mode(s, Channel::from_excess(0.6, 1.01));
    CHECK(out.vx == doctest::Approx(0.6 * 9.0 + 0.4 * 1.01).epsilon(1e-12));
    CHECK(out.vp == doctest::Approx(0.6 / 9.0 + 0.4 * 1.01).epsilon(1e-12));
}

TEST_CASE("single-mode Gaussian fidelity") {
    SUBCASE("identical states have fidelity 1") {
        const SingleModeGaussian s{2.3, 0.9};
        CHECK(gaussian_fidelity_1mode(s, s) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("two pure squeezed vacua: 1/cosh(r1 - r2), matching the number-basis overlap") {
        const double r1 = std::atanh(0.3), r2 = std::atanh(0.7);
        const auto s1 = squeezed_vacuum(SqueezingParam::from_r(r1));
        const auto s2 = squeezed_vacuum(SqueezingParam::from_r(r2));
        const double closed = gaussian_fidelity_1mode(s1, s2);
        CHECK(closed == doctest::Approx(1.0 / std::cosh(r1 - r2)).epsilon(1e-12));
        const auto a1 = squeezed_vacuum_fock(r1, 60);
        const auto a2 = squeezed_vacuum_fock(r2, 60);
        double overlap = 0.0;
        for (int i = 0; i <= 60; ++i) overlap += a1[i] * a2[i];
        CHECK(closed == doctest::Approx(overlap * overlap).epsilon(1e-6));
    }
    SUBCASE("vacuum against a thermal state: 2/(1+V)") {
        for (double V : {1.5, 3.0, 9.0})
            CHECK(gaussian_fidelity_1mode(SingleModeGaussian{1, 1}, SingleModeGaussian{V, V})
                  == doctest::Approx(2.0 / (1.0 + V)).epsilon(1e-12));
    }
    SUBCASE("symmetry and bounds on random physical pairs") {
        std::mt19937_64 rng(5150);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int k = 0; k < 200; ++k) {
            const double r1 = u(rng), r2 = u(rng);
            const SingleModeGaussian s1{std::exp(2 * r1) + u(rng), std::exp(-2 * r1) + u(rng)};
            const SingleModeGaussian s2{std::exp(2 * r2) + u(rng), std::exp(-2 * r2) + u(rng)};
            const double f12 = gaussian_fidelity_1mode(s1, s2);
            const double f21 = gaussian_fidelity_1mode(s2, s1);
            CHECK(f12 == doctest::Approx(f21).epsilon(1e-12));
            CHECK(f12 > 0.0);
            CHECK(f12 <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("two-mode pure-state fidelity") {
    const auto in = tmsv(SqueezingParam::from_tanh(0.3));
    CHECK(fidelity_pure_two_mode(in, in) == doctest::Approx(1.0).epsilon(1e-12));
    // |<tmsv(0.3)|tmsv(0.55)>|^2, frozen from the number-basis overlap oracle
    const auto other = tmsv(SqueezingParam::from_tanh(0.55));
    CHECK(fidelity_pure_two_mode(in, other) == doctest::Approx(0.9103589228728175).epsilon(1e-9));
    CHECK_THROWS_AS(fidelity_pure_two_mode(TwoModeCovariance{2, 2, 0, 0}, in), std::domain_error);
}

TEST_CASE("fidelity pathology scan") {
    SUBCASE("the paper's parameters produce a nonempty overlap region") {
        const auto res = appendix_a_scan(SqueezingParam::from_tanh(0.8), 1.01, 2.5, 100, 100,
                                         0.005, 0.995, 1.0, 3.0);
        CHECK(res.region_count[0] > 0);  // F1 < F2 while the composite breaks entanglement
        CHECK(res.region_count[0] + res.region_count[1] + res.region_count[2]
                  + res.region_count[3]
              == 100 * 100);
    }
    SUBCASE("an identity amplifier leg makes the two pipelines coincide") {
        const auto res = appendix_a_scan(SqueezingParam::from_tanh(0.8), 1.01, 1.0, 12, 3,
                                         0.1, 0.9, 1.0, 1.0);
        for (const auto& c : res.cells) {
            CHECK(c.f1 == doctest::Approx(c.f2).epsilon(1e-12));
            CHECK(c.f1_single == doctest::Approx(c.f2_single).epsilon(1e-12));
        }
    }
    SUBCASE("serial and parallel scans are bit-identical") {
        const auto a = appendix_a_scan(SqueezingParam::from_tanh(0.8), 1.01, 2.5, 40, 40,
                                       0.005, 0.995, 1.0, 3.0, ExecPolicy::serial);
        const auto b = appendix_a_scan(SqueezingParam::from_tanh(0.8), 1.01, 2.5, 40, 40,
                                       0.005, 0.995, 1.0, 3.0, ExecPolicy::parallel);
        for (std::size_t i = 0; i < a.cells.size(); ++i) {
            CHECK(a.cells[i].f1 == b.cells[i].f1);
            CHECK(a.cells[i].f2 == b.cells[i].f2);
            CHECK(a.cells[i].region == b.cells[i].region);
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(appendix_a_scan(SqueezingParam::from_tanh(0.8), 0.9, 2.5, 10, 10,
                                        0.1, 0.9, 1.0, 2.0),
                        std::invalid_argument);
    }
}
