#pragma once

#include <string_view>

#include "cogsim/config.hpp"

namespace cogsim {

/// Placement regime of the small cell relative to the MBS.
///   I   : min_distance <= d1 <= r + min_distance
///   II  : r + min_distance < d1 < R - r
///   III : R - r <= d1 <= R + r
enum class Scenario { I = 1, II = 2, III = 3 };

std::string_view to_string(Scenario s);

/// Throws DomainError if d1 lies outside [min_distance, R + r].
Scenario classify_scenario(double d1_km, const SystemConfig& cfg);

/// Area of the small-cell disk outside the MBS exclusion disk of radius xi.
/// Valid for xi <= d1 <= r + xi.
double interference_area_near(double d1_km, double r_km, double xi_km);

/// Area of the small-cell disk inside the macro disk (lens area).
/// Valid for R - r <= d1 <= R + r.
double interference_area_edge(double d1_km, double r_km, double macro_r_km);

/// Annulus of MBS distances in which the MU could be interfered with, and the
/// part of it covered by the small cell.
struct RegionAreas {
    double region_km2;
    double interference_km2;
};

/// Inner and outer MBS distances of the interference-capable annulus.
struct RegionBounds {
    double inner_km;
    double outer_km;
};

RegionBounds region_bounds(Scenario scenario, double d1_km, const SystemConfig& cfg);

/// Throws DomainError if the scenario does not match d1.
RegionAreas region_areas(Scenario scenario, double d1_km, const SystemConfig& cfg);

/// arccos that tolerates arguments within 1e-12 of [-1, 1] and throws
/// DomainError beyond that.
double guarded_acos(double x);

}  // namespace cogsim
