#pragma once

#include <string>

#include "cogsim/config.hpp"
#include "cogsim/geometry.hpp"
#include "cogsim/learner.hpp"

namespace cogsim {

/// Where the inner and outer region boundaries fall among the learned
/// distances:
///   I   both below        IV  inner between, outer between
///   II  below / between   V   inner between, outer above
///   III below / above     VI  both above
enum class CaseTag { I = 1, II, III, IV, V, VI };

std::string_view to_string(CaseTag c);

struct ScenarioCase {
    Scenario scenario;
    CaseTag tag;
    BoundaryIndex inner;
    BoundaryIndex outer;

    /// Compact label such as "II/IV".
    std::string label() const;
    friend bool operator==(const ScenarioCase&, const ScenarioCase&) = default;
};

/// Maps a pair of boundary positions to its case. Throws DomainError for the
/// combinations that an ordered sample set cannot produce.
CaseTag case_from_indices(const BoundaryIndex& inner, const BoundaryIndex& outer);

ScenarioCase classify_case(const SnrSampleSet& samples, Scenario scenario, double d1_km,
                           const SystemConfig& cfg);

/// Upper bound on the probability that the MU lies in the interference-capable
/// annulus, given K samples.
double region_prob_upper(const ScenarioCase& sc, int sample_count);

struct ApDecision {
    double access_probability;
    ScenarioCase scenario_case;
    double region_prob_upper;
    RegionAreas areas;
};

/// Largest access probability that keeps
///   rho_ap * region_prob_upper * interference_area / region_area <= eta,
/// capped at 1. Uses cfg.ip_constraint as eta and cfg.target_snr_db as the
/// target SNR assumed by the learner.
ApDecision design_ap(const SnrSampleSet& samples, double d1_km, const SystemConfig& cfg);

/// The same bound for given areas and region probability.
double max_access_probability(double eta, const RegionAreas& areas, double region_prob);

}  // namespace cogsim
