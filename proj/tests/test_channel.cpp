#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"

#include "cogsim/channel.hpp"
#include "cogsim/errors.hpp"
#include "cogsim/snr_stats.hpp"

using namespace cogsim;
using doctest::Approx;

TEST_CASE("path loss reference values") {
    CHECK(path_loss_gain(1.0, 0.035) == Approx(1.58489319246111e-13).epsilon(1e-12));
    CHECK(path_loss_gain(0.5, 0.035) == Approx(2.14720141009876e-12).epsilon(1e-12));
    CHECK(path_loss_db(0.035, 0.035) == Approx(73.25695846757036).epsilon(1e-12));
    CHECK(linear_to_db(path_loss_gain(0.2, 0.035)) == Approx(-path_loss_db(0.2, 0.035)).epsilon(1e-12));
    CHECK_THROWS_AS(path_loss_gain(0.01, 0.035), DomainError);
}

TEST_CASE("path loss is strictly decreasing") {
    double prev = path_loss_gain(0.035, 0.035);
    for (double d = 0.036; d < 2.0; d += 0.001) {
        const double g = path_loss_gain(d, 0.035);
        REQUIRE(g < prev);
        prev = g;
    }
}

TEST_CASE("power control hits the target") {
    SystemConfig cfg;
    cfg.noise_power_mw = std::pow(10.0, -11.4);
    const double p = clpc_transmit_power(cfg, 0.5, 1.0, 1.0);
    CHECK(p == Approx(185.4074651223267).epsilon(1e-12));
    CHECK(clpc_transmit_power(cfg, 0.5, 2.0, 1.0) == Approx(p / 2).epsilon(1e-14));

    Rng rng(7);
    std::exponential_distribution<double> expo(1.0);
    std::lognormal_distribution<double> shadow(0.0, 8.0 * std::log(10.0) / 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double d0 = 0.035 + 0.465 * (i / 1000.0);
        const double h = expo(rng), gs = shadow(rng);
        const double pw = clpc_transmit_power(cfg, d0, h, gs);
        REQUIRE(mu_snr(cfg, d0, h, gs, pw) == Approx(db_to_linear(cfg.target_snr_db)).epsilon(1e-13));
    }
}

TEST_CASE("small-cell SNR from ratios") {
    const ChannelDraw same{0.7, 0.7, 1.3, 1.3};
    CHECK(csbs_snr_ideal_db(20.0, {0.2, 0.2}, same) == Approx(20.0).epsilon(1e-14));
    CHECK(csbs_snr_ideal_db(20.0, {1.0, 0.1}, same) == Approx(57.6).epsilon(1e-13));

    SystemConfig cfg;
    const ChannelDraw draw{0.4, 1.9, 0.5, 2.5};
    const LinkGeometry geom{0.3, 0.12};
    CHECK(linear_to_db(csbs_snr_linear(cfg, geom, draw)) ==
          Approx(csbs_snr_ideal_db(cfg.target_snr_db, geom, draw)).epsilon(1e-12));

    // only ratios matter
    const ChannelDraw scaled{0.4 * 3.0, 1.9 * 3.0, 0.5 * 0.2, 2.5 * 0.2};
    CHECK(csbs_snr_ideal_db(20.0, geom, scaled) == Approx(csbs_snr_ideal_db(20.0, geom, draw)).epsilon(1e-13));
}

TEST_CASE("block structure of channel draws") {
    SystemConfig cfg;
    cfg.blocks = 2;
    cfg.subblocks = 3;
    Rng rng(11);
    const auto draws = draw_block_channels(cfg, rng);
    REQUIRE(draws.size() == 6);
    for (int b = 0; b < 2; ++b) {
        for (int j = 1; j < 3; ++j) {
            CHECK(draws[b * 3 + j].gs0 == draws[b * 3].gs0);
            CHECK(draws[b * 3 + j].gs1 == draws[b * 3].gs1);
        }
    }
    CHECK(draws[0].h0_sq != draws[1].h0_sq);
    CHECK(draws[0].gs0 != draws[3].gs0);

    cfg.shadow_sigma_db = 0.0;
    for (const auto& d : draw_block_channels(cfg, rng)) {
        CHECK(d.gs0 == 1.0);
        CHECK(d.gs1 == 1.0);
    }
}

TEST_CASE("fading and shadowing ratio distributions") {
    SystemConfig cfg;
    cfg.blocks = 100000;
    Rng rng(2024);
    const auto draws = draw_block_channels(cfg, rng);
    std::vector<double> fading, shadowing;
    for (const auto& d : draws) {
        fading.push_back(d.fading_ratio_db());
        shadowing.push_back(d.shadowing_ratio_db());
    }
    CHECK(testsupport::ks_distance(fading, cdf_theta_r) < 0.01);
    const double sd = cfg.shadow_sigma_db * std::sqrt(2.0);
    CHECK(testsupport::ks_distance(shadowing, [sd](double x) { return testsupport::normal_cdf(x, sd); }) < 0.01);

    double sq = 0.0;
    for (double s : shadowing) sq += s * s;
    CHECK(sq / shadowing.size() == Approx(2.0 * 64.0).epsilon(0.02));
}

TEST_CASE("noisy estimate converges to the true SNR") {
    Rng rng(3);
    for (double snr_db : {-5.0, 0.0, 10.0, 30.0}) {
        const double snr = db_to_linear(snr_db);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i)
            worst = std::max(worst, std::abs(linear_to_db(estimate_snr_from_samples(snr, 1 << 20, rng)) - snr_db));
        CHECK(worst < 0.05);
    }
    // the estimator is unbiased in the linear domain
    double sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) sum += estimate_snr_from_samples(10.0, 64, rng);
    CHECK(sum / n == Approx(10.0).epsilon(0.01));
    CHECK(estimate_snr_from_samples(1e-9, 4, rng) >= kSnrEstimateFloor);
}

TEST_CASE("observed SNR samples") {
    SystemConfig cfg;
    cfg.blocks = 5;
    cfg.subblocks = 2;
    Rng a(99), b(99);
    const auto xs = observe_snr_db(cfg, {0.3, 0.2}, a);
    const auto ys = observe_snr_db(cfg, {0.3, 0.2}, b);
    CHECK(xs.size() == 10);
    CHECK(xs == ys);

    cfg.mode = MeasurementMode::Ideal;
    cfg.shadow_sigma_db = 0.0;
    Rng c(5), d(5);
    const auto ideal = observe_snr_db(cfg, {0.3, 0.2}, c);
    const auto draws = draw_block_channels(cfg, d);
    for (std::size_t i = 0; i < ideal.size(); ++i)
        CHECK(ideal[i] == Approx(csbs_snr_ideal_db(20.0, {0.3, 0.2}, draws[i])).epsilon(1e-12));
}

TEST_CASE("config validation") {
    SystemConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.ip_constraint = 1.5;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("ip_constraint_eta out of (0,1)"), ConfigError);
    cfg = {};
    cfg.small_radius_km = 0.6;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.blocks = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.shadow_sigma_db = -1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    CHECK(mw_to_dbm(dbm_to_mw(-114.0)) == Approx(-114.0).epsilon(1e-14));
    CHECK(SystemConfig{}.noise_power_mw == Approx(std::pow(10.0, -11.4)).epsilon(1e-14));
}
