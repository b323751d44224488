#pragma once

#include <cstdint>
#include <string_view>

namespace cogsim {

enum class MeasurementMode { Ideal, Noisy };

std::string_view to_string(MeasurementMode mode);

// Physical and protocol constants of one macro cell with one cognitive small
// base station. Distances are in km, powers in linear mW.
struct SystemConfig {
    double macro_radius_km = 0.5;
    double small_radius_km = 0.1;
    double min_distance_km = 0.035;
    double noise_power_mw = 3.981071705534972e-12;  // -114 dBm
    double target_snr_db = 20.0;
    double ip_constraint = 0.01;
    double shadow_sigma_db = 8.0;
    int blocks = 50;
    int subblocks = 1;
    MeasurementMode mode = MeasurementMode::Noisy;
    int samples_per_subblock = 64;
    std::uint64_t seed = 1;

    int sample_count() const noexcept { return blocks * subblocks; }

    // Throws ConfigError naming the first violated invariant.
    void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

}  // namespace cogsim
