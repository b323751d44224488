#include "cogsim/config.hpp"

#include <cmath>

#include "cogsim/errors.hpp"

namespace cogsim {

std::string_view to_string(MeasurementMode mode) {
    switch (mode) {
        case MeasurementMode::Ideal: return "ideal";
        case MeasurementMode::Noisy: return "noisy";
    }
    return "unknown";
}

void SystemConfig::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(min_distance_km) || min_distance_km <= 0.0)
        throw ConfigError("min_distance_km must be positive");
    if (!finite(small_radius_km) || small_radius_km <= min_distance_km)
        throw ConfigError("small_radius_km must exceed min_distance_km");
    if (!finite(macro_radius_km) || macro_radius_km <= small_radius_km)
        throw ConfigError("macro_radius_km must exceed small_radius_km");
    if (!finite(noise_power_mw) || noise_power_mw <= 0.0)
        throw ConfigError("noise_power must be positive");
    if (!finite(target_snr_db))
        throw ConfigError("target_snr_db must be finite");
    if (!(ip_constraint > 0.0 && ip_constraint < 1.0))
        throw ConfigError("ip_constraint_eta out of (0,1)");
    if (!finite(shadow_sigma_db) || shadow_sigma_db < 0.0)
        throw ConfigError("shadow_sigma_db must be non-negative");
    if (blocks < 1) throw ConfigError("blocks must be at least 1");
    if (subblocks < 1) throw ConfigError("subblocks must be at least 1");
    if (mode == MeasurementMode::Noisy && samples_per_subblock < 1)
        throw ConfigError("samples_per_subblock must be at least 1");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
double mw_to_dbm(double mw) { return linear_to_db(mw); }

}  // namespace cogsim
