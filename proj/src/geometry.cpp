#include "cogsim/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "cogsim/errors.hpp"

namespace cogsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAcosSlack = 1e-12;

std::string km(double v) { return std::to_string(v) + " km"; }

// Triangle area from side lengths (Kahan's ordering), 0 for degenerate input.
double triangle_area(double x, double y, double z) {
    std::array<double, 3> s{x, y, z};
    std::sort(s.begin(), s.end(), std::greater<>());
    const double a = s[0], b = s[1], c = s[2];
    const double p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return p > 0.0 ? 0.25 * std::sqrt(p) : 0.0;
}

struct LensAngles {
    double angle_a;  // half-angle subtended at the centre of circle a
    double angle_b;
    double half_chord;
};

// Two circles with radii ra, rb whose centres are d apart. The angles are
// arccos((d^2 + ra^2 - rb^2) / (2 d ra)) and its counterpart, evaluated via
// atan2 of the half-chord so that tangent configurations stay exact.
LensAngles lens_angles(double d, double ra, double rb) {
    const double cos_a = (d * d + ra * ra - rb * rb) / (2.0 * d * ra);
    const double cos_b = (d * d + rb * rb - ra * ra) / (2.0 * d * rb);
    guarded_acos(cos_a);
    guarded_acos(cos_b);
    const double h = 2.0 * triangle_area(d, ra, rb) / d;
    return {std::atan2(h, cos_a * ra), std::atan2(h, cos_b * rb), h};
}

}  // namespace

std::string_view to_string(Scenario s) {
    switch (s) {
        case Scenario::I: return "I";
        case Scenario::II: return "II";
        case Scenario::III: return "III";
    }
    return "?";
}

double guarded_acos(double x) {
    if (x > 1.0 + kAcosSlack || x < -1.0 - kAcosSlack || std::isnan(x))
        throw DomainError("arccos argument " + std::to_string(x) + " outside [-1, 1]");
    return std::acos(std::clamp(x, -1.0, 1.0));
}

Scenario classify_scenario(double d1_km, const SystemConfig& cfg) {
    const double r = cfg.small_radius_km;
    const double xi = cfg.min_distance_km;
    const double big_r = cfg.macro_radius_km;
    if (!(d1_km >= xi && d1_km <= big_r + r))
        throw DomainError("MBS to C-SBS distance " + km(d1_km) + " outside [" + km(xi) + ", " +
                          km(big_r + r) + "]");
    if (d1_km <= r + xi) return Scenario::I;
    if (d1_km < big_r - r) return Scenario::II;
    return Scenario::III;
}

double interference_area_near(double d1_km, double r_km, double xi_km) {
    if (!(d1_km >= xi_km && d1_km <= r_km + xi_km))
        throw DomainError("near-MBS interference area needs " + km(xi_km) + " <= d1 <= " +
                          km(r_km + xi_km) + ", got " + km(d1_km));
    if (d1_km < r_km - xi_km) return kPi * r_km * r_km - kPi * xi_km * xi_km;
    const auto lens = lens_angles(d1_km, xi_km, r_km);
    const double phi1 = lens.angle_a;
    const double phi2 = lens.angle_b;
    // d1 * xi * sin(phi1) == d1 * half_chord
    return (kPi - phi2) * r_km * r_km - phi1 * xi_km * xi_km + d1_km * lens.half_chord;
}

double interference_area_edge(double d1_km, double r_km, double macro_r_km) {
    if (!(d1_km >= macro_r_km - r_km && d1_km <= macro_r_km + r_km))
        throw DomainError("cell-edge interference area needs " + km(macro_r_km - r_km) +
                          " <= d1 <= " + km(macro_r_km + r_km) + ", got " + km(d1_km));
    // externally tangent disks touch in a single point
    if (d1_km == macro_r_km + r_km) return 0.0;
    const auto lens = lens_angles(d1_km, macro_r_km, r_km);
    const double phi3 = lens.angle_a;
    const double phi4 = lens.angle_b;
    // R * d1 * sin(phi3) == d1 * half_chord
    const double area =
        phi3 * macro_r_km * macro_r_km + phi4 * r_km * r_km - d1_km * lens.half_chord;
    return std::max(area, 0.0);
}

RegionBounds region_bounds(Scenario scenario, double d1_km, const SystemConfig& cfg) {
    const double r = cfg.small_radius_km;
    switch (scenario) {
        case Scenario::I: return {cfg.min_distance_km, d1_km + r};
        case Scenario::II: return {d1_km - r, d1_km + r};
        case Scenario::III: return {d1_km - r, cfg.macro_radius_km};
    }
    throw DomainError("unknown scenario");
}

RegionAreas region_areas(Scenario scenario, double d1_km, const SystemConfig& cfg) {
    if (classify_scenario(d1_km, cfg) != scenario)
        throw DomainError("scenario " + std::string(to_string(scenario)) +
                          " is inconsistent with d1 = " + km(d1_km));
    const double r = cfg.small_radius_km;
    const double xi = cfg.min_distance_km;
    const double big_r = cfg.macro_radius_km;
    const double outer = d1_km + r;
    const double inner = d1_km - r;
    switch (scenario) {
        case Scenario::I:
            return {kPi * outer * outer - kPi * xi * xi, interference_area_near(d1_km, r, xi)};
        case Scenario::II:
            return {kPi * outer * outer - kPi * inner * inner, kPi * r * r};
        case Scenario::III:
            return {kPi * big_r * big_r - kPi * inner * inner,
                    interference_area_edge(d1_km, r, big_r)};
    }
    throw DomainError("unknown scenario");
}

}  // namespace cogsim
