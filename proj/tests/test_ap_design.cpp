#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cogsim/ap_design.hpp"
#include "cogsim/errors.hpp"
#include "cogsim/simulator.hpp"

using namespace cogsim;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

SnrSampleSet from_distances(const std::vector<double>& ds, double d1) {
    std::vector<double> xs;
    for (double d : ds) xs.push_back(20.0 + 37.6 * std::log10(d / d1));
    return SnrSampleSet(xs);
}

}  // namespace

TEST_CASE("case table") {
    using B = BoundaryIndex;
    CHECK(case_from_indices(B::below(), B::below()) == CaseTag::I);
    CHECK(case_from_indices(B::below(), B::between(3)) == CaseTag::II);
    CHECK(case_from_indices(B::below(), B::above()) == CaseTag::III);
    CHECK(case_from_indices(B::between(2), B::between(2)) == CaseTag::IV);
    CHECK(case_from_indices(B::between(2), B::between(5)) == CaseTag::IV);
    CHECK(case_from_indices(B::between(2), B::above()) == CaseTag::V);
    CHECK(case_from_indices(B::above(), B::above()) == CaseTag::VI);
    CHECK_THROWS_AS(case_from_indices(B::between(5), B::between(2)), DomainError);
    CHECK_THROWS_AS(case_from_indices(B::above(), B::below()), DomainError);
    CHECK_THROWS_AS(case_from_indices(B::between(1), B::below()), DomainError);
}

TEST_CASE("region probability bound per case") {
    using B = BoundaryIndex;
    CHECK(region_prob_upper({Scenario::I, CaseTag::I, B::below(), B::below()}, 3) == 0.125);
    for (int K : {1, 5, 50, 400})
        CHECK(region_prob_upper({Scenario::II, CaseTag::III, B::below(), B::above()}, K) == 1.0);
    CHECK(region_prob_upper({Scenario::I, CaseTag::IV, B::between(1), B::between(2)}, 4) == 0.625);
    CHECK(region_prob_upper({Scenario::I, CaseTag::VI, B::above(), B::above()}, 4) == 0.0625);
    CHECK(region_prob_upper({Scenario::III, CaseTag::V, B::between(3), B::above()}, 4) == 0.3125);
    CHECK(region_prob_upper({Scenario::II, CaseTag::II, B::below(), B::between(1)}, 4) == 0.3125);
}

TEST_CASE("access probability examples") {
    SystemConfig cfg;

    // all learned distances between xi and d1 + r
    auto d = design_ap(from_distances({0.06, 0.08, 0.1, 0.12}, 0.05), 0.05, cfg);
    CHECK(d.scenario_case.label() == "I/III");
    CHECK(d.access_probability == Approx(0.02424501424501425).epsilon(1e-12));

    d = design_ap(from_distances({0.42, 0.45, 0.48}, 0.5), 0.5, cfg);
    CHECK(d.scenario_case.label() == "III/III");
    CHECK(d.access_probability == Approx(0.1879863945343757).epsilon(1e-12));

    std::vector<double> far(50, 0.45);
    d = design_ap(from_distances(far, 0.25), 0.25, cfg);
    CHECK(d.scenario_case.label() == "II/I");
    CHECK(d.access_probability == 1.0);

    d = design_ap(from_distances({0.3, 0.4}, 0.6), 0.6, cfg);
    CHECK(d.areas.interference_km2 == 0.0);
    CHECK(d.access_probability == 1.0);
}

TEST_CASE("access probability guards") {
    const RegionAreas a{0.3, 0.03};
    CHECK(max_access_probability(0.0, a, 0.5) == 0.0);
    CHECK(max_access_probability(0.01, {0.3, 0.0}, 0.5) == 1.0);
    CHECK(max_access_probability(0.01, a, 0.0) == 1.0);
    CHECK(max_access_probability(0.01, a, 1.0) == Approx(0.1));
    CHECK(max_access_probability(0.5, a, 1.0) == 1.0);
}

TEST_CASE("designed access respects the constraint and grows with eta") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> snr(20.0, 11.0);
    std::uniform_real_distribution<double> ud1(0.035, 0.6);
    for (int rep = 0; rep < 2000; ++rep) {
        SystemConfig cfg;
        const double d1 = ud1(rng);
        const int K = 1 + static_cast<int>(rng() % 120);
        std::vector<double> xs(K);
        for (auto& x : xs) x = snr(rng);
        const SnrSampleSet s(xs);
        double prev = -1.0;
        for (double eta : {0.001, 0.01, 0.05, 0.2, 0.9}) {
            cfg.ip_constraint = eta;
            const auto dec = design_ap(s, d1, cfg);
            REQUIRE(dec.access_probability >= 0.0);
            REQUIRE(dec.access_probability <= 1.0);
            REQUIRE(dec.access_probability >= prev);
            prev = dec.access_probability;
            if (dec.access_probability < 1.0) {
                const double ip = dec.access_probability * dec.region_prob_upper *
                                  dec.areas.interference_km2 / dec.areas.region_km2;
                REQUIRE(ip <= eta * (1 + 1e-12));
            }
        }
    }
}

TEST_CASE("doubling the sample count keeps the interference bound") {
    SystemConfig cfg;
    cfg.mode = MeasurementMode::Ideal;
    cfg.blocks = 100;
    const int n = 20000;
    for (double d1 : {0.1, 0.3, 0.45}) {
        double ip_half = 0.0, ip_full = 0.0, sq_half = 0.0, sq_full = 0.0;
        for (int i = 0; i < n; ++i) {
            Rng rng = trial_rng(31, i);
            const Point2 mu = drop_mu(rng, cfg);
            const double d0 = std::max(std::hypot(mu.x_km, mu.y_km), cfg.min_distance_km);
            const SnrSampleSet full(observe_snr_db(cfg, {d0, d1}, rng));
            const bool hit = in_small_cell(mu, d1, cfg);
            const double a_half = hit ? design_ap(full.prefix(50), d1, cfg).access_probability : 0.0;
            const double a_full = hit ? design_ap(full, d1, cfg).access_probability : 0.0;
            ip_half += a_half;
            sq_half += a_half * a_half;
            ip_full += a_full;
            sq_full += a_full * a_full;
        }
        const auto check = [&](double sum, double sq) {
            const double mean = sum / n;
            const double se = std::sqrt((sq / n - mean * mean) / (n - 1));
            CHECK(mean <= cfg.ip_constraint + 3 * se);
        };
        check(ip_half, sq_half);
        check(ip_full, sq_full);
    }
}

TEST_CASE("the bound stays usable for very large sample counts") {
    SystemConfig cfg;
    std::vector<double> far(3000, 20.0 + 37.6 * std::log10(0.45 / 0.25));
    const auto d = design_ap(SnrSampleSet(far), 0.25, cfg);
    CHECK(d.region_prob_upper == 0.0);
    CHECK(d.access_probability == 1.0);
    CHECK(std::isfinite(d.access_probability));
}
