#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cogsim/ap_design.hpp"
#include "cogsim/channel.hpp"
#include "cogsim/config.hpp"

namespace cogsim {

struct Point2 {
    double x_km;
    double y_km;
};

/// Uniform position in the annulus min_distance <= |p| <= R around the MBS.
Point2 drop_mu(Rng& rng, const SystemConfig& cfg);

/// The C-SBS sits at (d1, 0).
bool in_small_cell(const Point2& mu, double d1_km, const SystemConfig& cfg);

struct TrialOptions {
    /// When set, the CLPC loop runs at a target drawn uniformly (dB) from this
    /// interval per trial while the learner keeps assuming cfg.target_snr_db.
    std::optional<std::pair<double, double>> true_target_range_db;
    /// Draw the access decision instead of weighting by the access probability.
    bool bernoulli_access = false;
};

struct TrialOutcome {
    double access_probability;
    bool in_interference_region;
    ScenarioCase scenario_case;
    double d0_km;
    bool accessed;  // Bernoulli draw; equals access_probability > 0 otherwise
};

/// One learn-then-design episode: drop a MU, collect K SNR samples, design
/// the access probability.
TrialOutcome run_trial(Rng& rng, const SystemConfig& cfg, double d1_km,
                       const TrialOptions& opts = {});

/// Independent engine for trial `trial` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

enum class SweepParameter { D1, Blocks, TargetSnr };

std::string_view to_string(SweepParameter p);

struct SweepGrid {
    SweepParameter parameter = SweepParameter::D1;
    std::vector<double> values;
    /// Small-cell distance used when the grid does not sweep d1.
    double fixed_d1_km = 0.1;
};

struct CaseKey {
    Scenario scenario;
    CaseTag tag;
    friend auto operator<=>(const CaseKey&, const CaseKey&) = default;
};

struct SimReport {
    SweepParameter parameter;
    double value;
    double empirical_ap;
    double stderr_ap;
    double empirical_ip;
    double stderr_ip;
    std::size_t n_trials;
    std::map<CaseKey, std::size_t> case_histogram;
    std::uint64_t seed;
    // baseline evaluated on the same MU drops
    double sli_ap;
    double sli_ip;
    double stderr_sli_ip;
};

struct RunOptions {
    TrialOptions trial;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// n_trials independent trials per grid point. Trial i of every point uses
/// trial_rng(cfg.seed, i), so points share MU drops and channel draws.
std::vector<SimReport> run_sweep(const SystemConfig& cfg, const SweepGrid& grid,
                                 std::size_t n_trials, const RunOptions& opts = {});

/// d1 sweep with the true target SNR drawn from [low, high] dB per trial.
std::vector<SimReport> run_imperfect_target_sweep(const SystemConfig& cfg,
                                                  std::span<const double> d1_grid,
                                                  std::size_t n_trials, double low_db,
                                                  double high_db, unsigned threads = 0);

/// Access probability from the uniform MU prior alone:
/// min{eta (pi R^2 - pi xi^2) / S_c, 1}.
double sli_baseline_ap(double d1_km, const SystemConfig& cfg);

enum class Comparator { StatisticalLocation, PartialLocation };

struct NotImplemented {
    std::string reason;
};

/// PartialLocation needs an algorithm this project does not reproduce and
/// always yields NotImplemented.
std::variant<double, NotImplemented> comparator_ap(Comparator c, double d1_km,
                                                   const SystemConfig& cfg);

struct SampleSummary {
    double mean;
    double stderr_mean;
};

/// Mean and standard error with compensated summation.
SampleSummary summarize(std::span<const double> xs);

/// d1 values from start to stop inclusive (within half a step).
std::vector<double> linear_grid(double start, double stop, double step);

}  // namespace cogsim
