#include "cogsim/ap_design.hpp"

#include <algorithm>

#include "cogsim/errors.hpp"

namespace cogsim {

std::string_view to_string(CaseTag c) {
    switch (c) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
        case CaseTag::V: return "V";
        case CaseTag::VI: return "VI";
    }
    return "?";
}

std::string ScenarioCase::label() const {
    return std::string(to_string(scenario)) + "/" + std::string(to_string(tag));
}

CaseTag case_from_indices(const BoundaryIndex& inner, const BoundaryIndex& outer) {
    using K = BoundaryIndex::Kind;
    switch (inner.kind) {
        case K::Below:
            switch (outer.kind) {
                case K::Below: return CaseTag::I;
                case K::Between: return CaseTag::II;
                case K::Above: return CaseTag::III;
            }
            break;
        case K::Between:
            if (outer.kind == K::Between && inner.k <= outer.k) return CaseTag::IV;
            if (outer.kind == K::Above) return CaseTag::V;
            break;
        case K::Above:
            if (outer.kind == K::Above) return CaseTag::VI;
            break;
    }
    throw DomainError("impossible boundary combination inner=" + inner.to_string() +
                      " outer=" + outer.to_string() + " (sample set not ordered?)");
}

ScenarioCase classify_case(const SnrSampleSet& samples, Scenario scenario, double d1_km,
                           const SystemConfig& cfg) {
    const auto bounds = region_bounds(scenario, d1_km, cfg);
    const auto inner = boundary_index(samples, bounds.inner_km, d1_km, cfg.target_snr_db);
    const auto outer = boundary_index(samples, bounds.outer_km, d1_km, cfg.target_snr_db);
    return {scenario, case_from_indices(inner, outer), inner, outer};
}

double region_prob_upper(const ScenarioCase& sc, int sample_count) {
    // Pr{d0 >= inner} is at most Pr{B >= n_inner} and Pr{d0 >= outer} is at
    // least Pr{B >= n_outer + 1}; their difference is Pr{n_inner <= B <= n_outer}.
    const HalfBinomial binom(sample_count);
    return binom.range(sc.inner.count(sample_count), sc.outer.count(sample_count));
}

double max_access_probability(double eta, const RegionAreas& areas, double region_prob) {
    if (areas.interference_km2 <= 0.0) return 1.0;
    if (eta <= 0.0) return 0.0;
    // the bound underflows to 0 once K exceeds ~1070
    if (region_prob <= 0.0) return 1.0;
    return std::min(eta * areas.region_km2 / (region_prob * areas.interference_km2), 1.0);
}

ApDecision design_ap(const SnrSampleSet& samples, double d1_km, const SystemConfig& cfg) {
    const Scenario scenario = classify_scenario(d1_km, cfg);
    const auto sc = classify_case(samples, scenario, d1_km, cfg);
    const auto areas = region_areas(scenario, d1_km, cfg);
    const double rho = region_prob_upper(sc, static_cast<int>(samples.size()));
    return {max_access_probability(cfg.ip_constraint, areas, rho), sc, rho, areas};
}

}  // namespace cogsim
