#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cogsim/config_io.hpp"

namespace cogsim {

struct ExperimentResult {
    std::vector<std::filesystem::path> files;  // everything written, in order
    std::vector<std::string> notes;            // human-readable remarks for the console
};

/// Runs `cfg.manifest.experiment` and writes its CSVs, baseline tables and plot
/// scripts under cfg.manifest.output_dir:
///   ApIpVsD1         ApIpVsD1.csv, ApIpVsD1_sli.csv
///   ApIpVsBlocks     ApIpVsBlocks_I<n>.csv per block count
///   ApVsTargetSnr    ApVsTargetSnr_d1_<d1>.csv per fixed d1
///   ImperfectGammaT  ImperfectGammaT.csv, ImperfectGammaT_perfect.csv
///   SingleDecision   decision.json
ExperimentResult run_experiment(const ParsedConfig& cfg);

/// One learning episode at (d1, d0) followed by the access design. Trial 0 of
/// the configured seed supplies the randomness.
std::string single_decision_json(const SystemConfig& cfg, double d1_km, double d0_km);

}  // namespace cogsim
