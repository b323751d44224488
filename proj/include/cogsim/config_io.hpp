#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cogsim/config.hpp"

namespace cogsim {

enum class Experiment { ApIpVsD1, ApIpVsBlocks, ApVsTargetSnr, ImperfectGammaT, SingleDecision };

std::string_view to_string(Experiment e);
/// Throws ConfigError listing the valid names.
Experiment experiment_from_string(std::string_view name);

/// Sweep settings for the experiments. Defaults reproduce the macro-cell
/// setup with R = 0.5 km, r = 0.1 km.
struct ExperimentParams {
    std::vector<double> d1_grid;  // default 0.04 .. 0.6 step 0.02
    std::vector<int> block_counts{50, 100, 200};
    std::vector<double> target_snr_grid_db;  // default 10 .. 30 step 2
    std::vector<double> target_snr_d1_km{0.1, 0.25, 0.4};
    double imperfect_low_db = 17.0;
    double imperfect_high_db = 23.0;
    std::size_t trials = 10000;
    bool bernoulli_access = false;
    unsigned threads = 0;
    double decision_d1_km = 0.25;
    double decision_d0_km = 0.3;

    ExperimentParams();
};

struct RunManifest {
    std::string config_path;
    std::string output_dir = "results";
    Experiment experiment = Experiment::ApIpVsD1;
    std::map<std::string, std::string> overrides;
    std::uint64_t seed = 1;
    ExperimentParams params;
};

struct ParsedConfig {
    SystemConfig system;
    RunManifest manifest;
};

/// Parses a JSON configuration document. Omitted keys take their defaults and
/// an empty document yields the full default configuration. `overrides` maps
/// dotted keys (e.g. "system.blocks", "run.d1_grid") to values and takes
/// precedence over the document. Throws ConfigError with line/column for
/// syntax errors and with the key or invariant name for invalid values.
ParsedConfig parse_config(std::string_view text,
                          const std::map<std::string, std::string>& overrides = {});

/// Reads and parses `path`; throws IoError if it cannot be read.
ParsedConfig load_config(const std::filesystem::path& path,
                         const std::map<std::string, std::string>& overrides = {});

/// Normalised JSON document with every key spelled out.
std::string serialize_config(const ParsedConfig& cfg);

}  // namespace cogsim
