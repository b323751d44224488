#include "cogsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cogsim/errors.hpp"
#include "cogsim/learner.hpp"

namespace cogsim {

Point2 drop_mu(Rng& rng, const SystemConfig& cfg) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double xi2 = cfg.min_distance_km * cfg.min_distance_km;
    const double r2 = cfg.macro_radius_km * cfg.macro_radius_km;
    // inverse of the radial CDF (rho^2 - xi^2) / (R^2 - xi^2)
    const double rho = std::min(std::sqrt(xi2 + unit(rng) * (r2 - xi2)), cfg.macro_radius_km);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    return {rho * std::cos(angle), rho * std::sin(angle)};
}

bool in_small_cell(const Point2& mu, double d1_km, const SystemConfig& cfg) {
    return std::hypot(mu.x_km - d1_km, mu.y_km) <= cfg.small_radius_km;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

TrialOutcome run_trial(Rng& rng, const SystemConfig& cfg, double d1_km, const TrialOptions& opts) {
    const Point2 mu = drop_mu(rng, cfg);
    const double rho = std::hypot(mu.x_km, mu.y_km);
    const double d0 = std::max(rho, cfg.min_distance_km);
    const LinkGeometry geom{d0, d1_km};

    const auto draws = draw_block_channels(cfg, rng);

    // always consumed so that perfect and imperfect runs stay on the same stream
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    SystemConfig physical = cfg;
    if (opts.true_target_range_db) {
        const auto [lo, hi] = *opts.true_target_range_db;
        physical.target_snr_db = lo + u * (hi - lo);
    }

    std::vector<double> snr_db;
    snr_db.reserve(draws.size());
    for (const auto& d : draws) snr_db.push_back(csbs_snr_db(physical, geom, d, rng));

    const auto decision = design_ap(SnrSampleSet(std::move(snr_db)), d1_km, cfg);
    const double access_u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const bool accessed = opts.bernoulli_access ? access_u < decision.access_probability
                                                : decision.access_probability > 0.0;
    return {decision.access_probability, in_small_cell(mu, d1_km, cfg), decision.scenario_case, d0,
            accessed};
}

std::string_view to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::D1: return "d1_km";
        case SweepParameter::Blocks: return "blocks";
        case SweepParameter::TargetSnr: return "target_snr_db";
    }
    return "?";
}

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                const std::size_t lo = t * chunk;
                const std::size_t hi = std::min(n, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

SystemConfig config_for_point(const SystemConfig& base, const SweepGrid& grid, double value,
                              double& d1_km) {
    SystemConfig cfg = base;
    d1_km = grid.fixed_d1_km;
    switch (grid.parameter) {
        case SweepParameter::D1: d1_km = value; break;
        case SweepParameter::Blocks:
            if (value < 1.0 || value != std::floor(value))
                throw ConfigError("block count " + std::to_string(value) + " is not a positive integer");
            cfg.blocks = static_cast<int>(value);
            break;
        case SweepParameter::TargetSnr: cfg.target_snr_db = value; break;
    }
    try {
        classify_scenario(d1_km, cfg);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

}  // namespace

SampleSummary summarize(std::span<const double> xs) {
    if (xs.empty()) return {0.0, 0.0};
    CompensatedSum s;
    for (double x : xs) s.add(x);
    const double n = static_cast<double>(xs.size());
    const double mean = s.value() / n;
    if (xs.size() < 2) return {mean, 0.0};
    CompensatedSum sq;
    for (double x : xs) sq.add((x - mean) * (x - mean));
    return {mean, std::sqrt(sq.value() / (n - 1.0) / n)};
}

std::vector<SimReport> run_sweep(const SystemConfig& cfg, const SweepGrid& grid,
                                 std::size_t n_trials, const RunOptions& opts) {
    if (grid.values.empty()) throw ConfigError("sweep grid is empty");
    if (n_trials == 0) throw ConfigError("n_trials must be positive; no report can be formed");

    // validate every point before spending time on any of them
    for (double v : grid.values) {
        double d1 = 0.0;
        config_for_point(cfg, grid, v, d1);
    }

    std::vector<SimReport> reports;
    reports.reserve(grid.values.size());
    std::vector<TrialOutcome> outcomes(n_trials);
    std::vector<double> ap(n_trials), ip(n_trials), sli_ip(n_trials);

    for (double v : grid.values) {
        double d1 = 0.0;
        const SystemConfig point_cfg = config_for_point(cfg, grid, v, d1);
        const double sli = sli_baseline_ap(d1, point_cfg);

        parallel_for(n_trials, opts.threads, [&](std::size_t i) {
            Rng rng = trial_rng(cfg.seed, i);
            outcomes[i] = run_trial(rng, point_cfg, d1, opts.trial);
        });

        SimReport rep{};
        rep.parameter = grid.parameter;
        rep.value = v;
        rep.n_trials = n_trials;
        rep.seed = cfg.seed;
        rep.sli_ap = sli;
        for (std::size_t i = 0; i < n_trials; ++i) {
            const auto& o = outcomes[i];
            const double a = opts.trial.bernoulli_access ? (o.accessed ? 1.0 : 0.0) : o.access_probability;
            ap[i] = a;
            ip[i] = o.in_interference_region ? a : 0.0;
            sli_ip[i] = o.in_interference_region ? sli : 0.0;
            ++rep.case_histogram[CaseKey{o.scenario_case.scenario, o.scenario_case.tag}];
        }
        const auto ap_s = summarize(ap);
        const auto ip_s = summarize(ip);
        const auto sli_s = summarize(sli_ip);
        rep.empirical_ap = ap_s.mean;
        rep.stderr_ap = ap_s.stderr_mean;
        rep.empirical_ip = ip_s.mean;
        rep.stderr_ip = ip_s.stderr_mean;
        rep.sli_ip = sli_s.mean;
        rep.stderr_sli_ip = sli_s.stderr_mean;
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<SimReport> run_imperfect_target_sweep(const SystemConfig& cfg,
                                                  std::span<const double> d1_grid,
                                                  std::size_t n_trials, double low_db,
                                                  double high_db, unsigned threads) {
    if (!(low_db <= high_db)) throw ConfigError("target SNR interval must satisfy low <= high");
    RunOptions opts;
    opts.threads = threads;
    opts.trial.true_target_range_db = std::make_pair(low_db, high_db);
    SweepGrid grid{SweepParameter::D1, {d1_grid.begin(), d1_grid.end()}, 0.0};
    return run_sweep(cfg, grid, n_trials, opts);
}

double sli_baseline_ap(double d1_km, const SystemConfig& cfg) {
    const auto areas = region_areas(classify_scenario(d1_km, cfg), d1_km, cfg);
    const double r = cfg.macro_radius_km;
    const double xi = cfg.min_distance_km;
    const RegionAreas cell{std::numbers::pi * (r * r - xi * xi), areas.interference_km2};
    return max_access_probability(cfg.ip_constraint, cell, 1.0);
}

std::variant<double, NotImplemented> comparator_ap(Comparator c, double d1_km,
                                                   const SystemConfig& cfg) {
    switch (c) {
        case Comparator::StatisticalLocation: return sli_baseline_ap(d1_km, cfg);
        case Comparator::PartialLocation:
            return NotImplemented{
                "partial-location comparator requires an externally published algorithm; "
                "not implemented"};
    }
    return NotImplemented{"unknown comparator"};
}

std::vector<double> linear_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop >= start)) throw ConfigError("grid needs step > 0 and stop >= start");
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
    for (std::size_t i = 0; i <= n; ++i) {
        // round to 12 decimals so 0.04 + 3 * 0.02 prints as 0.1
        const double v = start + static_cast<double>(i) * step;
        out.push_back(std::round(v * 1e12) / 1e12);
    }
    return out;
}

}  // namespace cogsim
