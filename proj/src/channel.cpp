#include "cogsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cogsim/errors.hpp"

namespace cogsim {

double ChannelDraw::fading_ratio_db() const { return 10.0 * std::log10(h1_sq / h0_sq); }

double ChannelDraw::shadowing_ratio_db() const {
    return 10.0 * std::log10(gs1) - 10.0 * std::log10(gs0);
}

namespace {

void require_distance(double d_km, double min_distance_km) {
    if (!(d_km >= min_distance_km))
        throw DomainError("distance " + std::to_string(d_km) + " km is below the minimum " +
                          std::to_string(min_distance_km) + " km");
}

void require_positive_gain(double g, const char* name) {
    if (!(g > 0.0) || !std::isfinite(g))
        throw DomainError(std::string("channel gain ") + name + " must be positive and finite");
}

}  // namespace

double path_loss_db(double d_km, double min_distance_km) {
    require_distance(d_km, min_distance_km);
    return kPathLossInterceptDb + kPathLossSlopeDb * std::log10(d_km);
}

double path_loss_gain(double d_km, double min_distance_km) {
    require_distance(d_km, min_distance_km);
    return std::pow(10.0, -kPathLossInterceptDb / 10.0) *
           std::pow(d_km, -kPathLossSlopeDb / 10.0);
}

double clpc_transmit_power(const SystemConfig& cfg, double d0_km, double h0_sq, double gs0) {
    require_positive_gain(h0_sq, "h0_sq");
    require_positive_gain(gs0, "gs0");
    const double g0 = path_loss_gain(d0_km, cfg.min_distance_km);
    return db_to_linear(cfg.target_snr_db) * cfg.noise_power_mw / (h0_sq * g0 * gs0);
}

double mu_snr(const SystemConfig& cfg, double d0_km, double h0_sq, double gs0, double power_mw) {
    const double g0 = path_loss_gain(d0_km, cfg.min_distance_km);
    return h0_sq * g0 * gs0 * power_mw / cfg.noise_power_mw;
}

double csbs_snr_linear(const SystemConfig& cfg, const LinkGeometry& geom, const ChannelDraw& draw) {
    require_positive_gain(draw.h1_sq, "h1_sq");
    require_positive_gain(draw.gs1, "gs1");
    const double p0 = clpc_transmit_power(cfg, geom.d0_km, draw.h0_sq, draw.gs0);
    const double g1 = path_loss_gain(geom.d1_km, cfg.min_distance_km);
    return draw.h1_sq * g1 * draw.gs1 * p0 / cfg.noise_power_mw;
}

double csbs_snr_ideal_db(double target_snr_db, const LinkGeometry& geom, const ChannelDraw& draw) {
    return target_snr_db + kPathLossSlopeDb * std::log10(geom.d0_km / geom.d1_km) +
           draw.fading_ratio_db() + draw.shadowing_ratio_db();
}

double estimate_snr_from_samples(double true_snr, int samples, Rng& rng) {
    // sum_m |sqrt(snr) + w_m|^2 with w_m ~ CN(0, 1) is half of a noncentral
    // chi-square with 2M degrees of freedom and noncentrality 2M snr, which
    // splits into one shifted normal and one central chi-square term.
    const double m2 = 2.0 * samples;
    std::normal_distribution<double> normal;
    const double shifted = std::sqrt(m2 * true_snr) + normal(rng);
    std::chi_squared_distribution<double> chi2(m2 - 1.0);
    const double energy = shifted * shifted + chi2(rng);
    const double estimate = energy / m2 - 1.0;
    return std::max(estimate, kSnrEstimateFloor);
}

double csbs_snr_db(const SystemConfig& cfg, const LinkGeometry& geom, const ChannelDraw& draw,
                   Rng& rng) {
    const double ideal_db = csbs_snr_ideal_db(cfg.target_snr_db, geom, draw);
    if (cfg.mode == MeasurementMode::Ideal) return ideal_db;
    return linear_to_db(estimate_snr_from_samples(db_to_linear(ideal_db), cfg.samples_per_subblock, rng));
}

std::vector<ChannelDraw> draw_block_channels(const SystemConfig& cfg, Rng& rng) {
    std::exponential_distribution<double> fading(1.0);
    std::normal_distribution<double> shadow_db(0.0, cfg.shadow_sigma_db);

    std::vector<ChannelDraw> draws;
    draws.reserve(static_cast<std::size_t>(cfg.sample_count()));
    for (int i = 0; i < cfg.blocks; ++i) {
        double gs0 = 1.0;
        double gs1 = 1.0;
        if (cfg.shadow_sigma_db > 0.0) {
            gs0 = db_to_linear(shadow_db(rng));
            gs1 = db_to_linear(shadow_db(rng));
        }
        for (int j = 0; j < cfg.subblocks; ++j) {
            // exponential(1) may return 0.0, which has no dB value
            double h0 = 0.0;
            double h1 = 0.0;
            while (!(h0 > 0.0)) h0 = fading(rng);
            while (!(h1 > 0.0)) h1 = fading(rng);
            draws.push_back({h0, h1, gs0, gs1});
        }
    }
    return draws;
}

std::vector<double> observe_snr_db(const SystemConfig& cfg, const LinkGeometry& geom, Rng& rng) {
    const auto draws = draw_block_channels(cfg, rng);
    std::vector<double> out;
    out.reserve(draws.size());
    for (const auto& d : draws) out.push_back(csbs_snr_db(cfg, geom, d, rng));
    return out;
}

}  // namespace cogsim
