#include <doctest.h>

#include <cmath>

#include "gausslab/entanglement.hpp"

using namespace gausslab;

TEST_CASE("eof_from_ro") {
    CHECK(eof_from_ro(0.0) == 0.0);
    // exact value at chi = 0.5: 8/3 - log2(3)
    CHECK(eof_from_ro(std::atanh(0.5)) == doctest::Approx(8.0 / 3.0 - std::log2(3.0)).epsilon(1e-12));
    CHECK(eof_from_ro(std::atanh(0.9)) > eof_from_ro(std::atanh(0.5)));
    CHECK_THROWS_AS(eof_from_ro(-0.1), std::domain_error);
}

TEST_CASE("ro through a channel (Eq.-5 route)") {
    SUBCASE("identity decoheres nothing") {
        CHECK(ro_tmsv_through_channel(0.8, Channel{1.0, 0.0}) == doctest::Approx(0.8).epsilon(1e-12));
        CHECK(ro_tmsv_through_channel(0.8, Channel{1.0, 1e-9})
              == doctest::Approx(0.8).epsilon(1e-6));
    }
    SUBCASE("entanglement-breaking boundary clamps to zero") {
        for (double tau : {0.3, 0.7, 1.3})
            CHECK(ro_tmsv_through_channel(1.0, Channel{tau, 1.0 + tau}) == 0.0);
    }
    SUBCASE("unphysical and out-of-domain inputs are rejected") {
        CHECK_THROWS_AS(ro_tmsv_through_channel(0.5, Channel{0.5, 0.2}), std::domain_error);
        CHECK_THROWS_AS(ro_tmsv_through_channel(-0.5, Channel{0.5, 0.6}), std::domain_error);
    }
    SUBCASE("decomposition round trip reproduces the direct evaluation") {
        const double r = std::atanh(0.5);
        const Channel g{0.5, 0.525};
        const double direct = ro_tmsv_through_channel(r, g);
        CHECK(direct > 0.0);
        const auto sigma = apply_to_mode2(tmsv(SqueezingParam::from_r(r)), g);
        const auto dec = decompose_tmsv_channel(sigma);
        CHECK(ro_tmsv_through_channel(dec.r, dec.channel) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("ro of the Choi state") {
    SUBCASE("additive-noise branch") {
        CHECK(ro_choi(Channel{1.0, 2.0}) == doctest::Approx(0.0));
        CHECK(ro_choi(Channel{1.0, 1.0}) == doctest::Approx(0.25 * std::log(4.0)).epsilon(1e-14));
    }
    SUBCASE("pure loss reduces to artanh(sqrt(tau))") {
        for (int i = 1; i <= 9; ++i) {
            const double tau = 0.1 * i;
            CHECK(ro_choi(Channel{tau, 1.0 - tau})
                  == doctest::Approx(std::atanh(std::sqrt(tau))).epsilon(1e-9));
        }
    }
    SUBCASE("identity rejected") {
        CHECK_THROWS_AS(ro_choi(Channel{1.0, 0.0}), std::domain_error);
    }
    SUBCASE("large-squeezing limit of the finite-state expression") {
        for (double tau : {0.3, 0.8, 1.4})
            for (double eps : {1.0, 1.2}) {
                const Channel g = Channel::from_excess(tau, eps);
                if (is_entanglement_breaking(g)) continue;
                CHECK(ro_tmsv_through_channel(10.0, g)
                      == doctest::Approx(ro_choi(g)).epsilon(1e-6));
            }
    }
}

TEST_CASE("decompose_tmsv_channel") {
    SUBCASE("a bare tmsv maps to the identity channel") {
        const auto dec = decompose_tmsv_channel(tmsv(SqueezingParam::from_tanh(0.5)));
        CHECK(dec.r == doctest::Approx(std::atanh(0.5)).epsilon(1e-12));
        CHECK(dec.channel.tau == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dec.channel.noise == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("round trip through a thermal channel") {
        const Channel g{0.7, 0.4};
        const auto sigma = apply_to_mode2(tmsv(SqueezingParam::from_tanh(0.5)), g);
        const auto dec = decompose_tmsv_channel(sigma);
        CHECK(dec.r == doctest::Approx(std::atanh(0.5)).epsilon(1e-10));
        CHECK(dec.channel.tau == doctest::Approx(0.7).epsilon(1e-10));
        CHECK(dec.channel.noise == doctest::Approx(0.4).epsilon(1e-10));
    }
    SUBCASE("explicit entries from the half-loss example") {
        const TwoModeCovariance sigma{5.0 / 3.0, 4.0 / 3.0, (4.0 / 3.0) * std::sqrt(0.5),
                                      -(4.0 / 3.0) * std::sqrt(0.5)};
        const auto dec = decompose_tmsv_channel(sigma);
        CHECK(dec.r == doctest::Approx(std::atanh(0.5)).epsilon(1e-12));
        CHECK(dec.channel.tau == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(dec.channel.noise == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(decompose_tmsv_channel(TwoModeCovariance{1.0, 2.0, 0.0, 0.0}),
                        std::domain_error);
        CHECK_THROWS_AS(decompose_tmsv_channel(TwoModeCovariance{2.0, 2.0, -1.0, 1.0}),
                        std::domain_error);
        CHECK_THROWS_AS(decompose_tmsv_channel(TwoModeCovariance{2.0, 2.0, 0.5, -0.7}),
                        std::domain_error);
        // balanced but outside the family: recovered channel would be unphysical
        CHECK_THROWS_AS(decompose_tmsv_channel(TwoModeCovariance{3.0, 1.0, 2.7, -2.7}),
                        std::domain_error);
    }
}

TEST_CASE("eof_state") {
    CHECK(eof_state(TwoModeCovariance{1, 1, 0, 0}) == 0.0);
    CHECK(eof_state(TwoModeCovariance{1, 3, 0, 0}) == 0.0);
    CHECK(eof_state(tmsv(SqueezingParam::from_tanh(0.5)))
          == doctest::Approx(eof_from_ro(std::atanh(0.5))).epsilon(1e-12));

    SUBCASE("the two code paths agree exactly") {
        const Channel g{0.5, 0.525};
        const double r = std::atanh(0.5);
        const auto sigma = apply_to_mode2(tmsv(SqueezingParam::from_r(r)), g);
        CHECK(eof_state(sigma)
              == doctest::Approx(eof_from_ro(ro_tmsv_through_channel(r, g))).epsilon(1e-12));
    }
    SUBCASE("unsupported states are an explicit error") {
        CHECK_THROWS_AS(eof_state(TwoModeCovariance{2.0, 2.0, 0.9, -0.2}), std::domain_error);
        CHECK_THROWS_AS(eof_state(TwoModeCovariance{1.0, 1.0, 0.5, -0.5}), std::domain_error);
    }
}

TEST_CASE("logarithmic negativity") {
    CHECK(log_negativity(TwoModeCovariance{1.5, 2.0, 0.0, 0.0}) == 0.0);
    for (double chi : {0.2, 0.5, 0.8}) {
        const double expected = std::log2((1.0 + chi) / (1.0 - chi));
        CHECK(log_negativity(tmsv(SqueezingParam::from_tanh(chi)))
              == doctest::Approx(expected).epsilon(1e-10));
    }
    const auto eb_out = apply_to_mode2(tmsv(SqueezingParam::from_tanh(0.6)), Channel{0.4, 1.5});
    CHECK(log_negativity(eb_out) == doctest::Approx(0.0));
}

TEST_CASE("entanglement vanishes exactly at the EB line for tmsv arms") {
    for (double r : {0.3, 0.8})
        for (double tau : {0.4, 0.9, 1.5}) {
            const Channel at{tau, 1.0 + tau};
            const Channel below{tau, 1.0 + tau - 0.05};
            const auto sig_at = apply_to_mode2(tmsv(SqueezingParam::from_r(r)), at);
            const auto sig_below = apply_to_mode2(tmsv(SqueezingParam::from_r(r)), below);
            CHECK(eof_state(sig_at) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(log_negativity(sig_at) == doctest::Approx(0.0).epsilon(1e-10));
            CHECK(eof_state(sig_below) > 0.0);
            CHECK(log_negativity(sig_below) > 0.0);
        }
}
