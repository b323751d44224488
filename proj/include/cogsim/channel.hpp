#pragma once

#include <random>
#include <vector>

#include "cogsim/config.hpp"

namespace cogsim {

using Rng = std::mt19937_64;

// Path-loss exponent of the 128 + 37.6 log10(d) dB macro model.
inline constexpr double kPathLossSlopeDb = 37.6;
inline constexpr double kPathLossInterceptDb = 128.0;

/// Distances from the MBS to the macro user (d0) and to the small cell (d1).
struct LinkGeometry {
    double d0_km;
    double d1_km;
};

/// One subblock worth of channel state. Fading gains vary per subblock, the
/// shadowing gains are shared by every subblock of a block.
struct ChannelDraw {
    double h0_sq;  // MBS -> MU fading power gain
    double h1_sq;  // MBS -> C-SBS fading power gain
    double gs0;    // MBS -> MU shadowing gain
    double gs1;    // MBS -> C-SBS shadowing gain

    double fading_ratio_db() const;     // 10 log10(h1_sq / h0_sq)
    double shadowing_ratio_db() const;  // 10 log10(gs1) - 10 log10(gs0)
};

double path_loss_db(double d_km, double min_distance_km);

/// Linear path gain 10^-12.8 d^-3.76. Throws DomainError for d < min distance.
double path_loss_gain(double d_km, double min_distance_km);

/// MBS transmit power (mW) that puts the MU exactly at the target SNR.
double clpc_transmit_power(const SystemConfig& cfg, double d0_km, double h0_sq, double gs0);

/// Received SNR (linear) at the MU for a given MBS transmit power.
double mu_snr(const SystemConfig& cfg, double d0_km, double h0_sq, double gs0, double power_mw);

/// Noise-free SNR of the MBS signal at the C-SBS, evaluated through the
/// transmit power and the physical link budget.
double csbs_snr_linear(const SystemConfig& cfg, const LinkGeometry& geom, const ChannelDraw& draw);

/// The same SNR in dB, evaluated from distance and gain ratios only.
double csbs_snr_ideal_db(double target_snr_db, const LinkGeometry& geom, const ChannelDraw& draw);

/// SNR observed by the C-SBS for one subblock. In Ideal mode this is the exact
/// dB value; in Noisy mode it is an energy-detector estimate over
/// `cfg.samples_per_subblock` received samples corrupted by AWGN.
double csbs_snr_db(const SystemConfig& cfg, const LinkGeometry& geom, const ChannelDraw& draw,
                   Rng& rng);

/// Estimate of a linear SNR from `samples` noisy received samples. The
/// estimate is max(mean|y|^2 / sigma^2 - 1, kSnrEstimateFloor).
double estimate_snr_from_samples(double true_snr, int samples, Rng& rng);

inline constexpr double kSnrEstimateFloor = 1e-6;

/// Draws blocks x subblocks channel states, block-major.
std::vector<ChannelDraw> draw_block_channels(const SystemConfig& cfg, Rng& rng);

/// Measures one SNR per subblock over freshly drawn channels.
std::vector<double> observe_snr_db(const SystemConfig& cfg, const LinkGeometry& geom, Rng& rng);

}  // namespace cogsim
