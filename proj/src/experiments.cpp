#include "cogsim/experiments.hpp"

#include <fstream>

#include "cogsim/errors.hpp"
#include "cogsim/learner.hpp"
#include "cogsim/report_io.hpp"
#include "cogsim/simulator.hpp"

namespace cogsim {

namespace fs = std::filesystem;

namespace {

void write_outputs(ExperimentResult& out, const std::vector<SimReport>& reports, const fs::path& dir,
                   const std::string& stem, FigureKind ap_kind, FigureKind ip_kind, double eta,
                   bool baseline) {
    const fs::path csv = dir / (stem + ".csv");
    write_report_csv(reports, csv);
    out.files.push_back(csv);
    if (baseline) {
        const fs::path sli = dir / (stem + "_sli.csv");
        write_baseline_csv(reports, sli);
        out.files.push_back(sli);
    }
    const fs::path ap_script = dir / ("plot_" + stem + "_ap.py");
    emit_plot_script(csv, ap_kind, eta, ap_script);
    out.files.push_back(ap_script);
    const fs::path ip_script = dir / ("plot_" + stem + "_ip.py");
    emit_plot_script(csv, ip_kind, eta, ip_script);
    out.files.push_back(ip_script);
}

std::string tag_number(double v) {
    std::string s = format_number(v);
    for (auto& c : s)
        if (c == '.') c = 'p';
    return s;
}

}  // namespace

std::string single_decision_json(const SystemConfig& cfg, double d1_km, double d0_km) {
    if (!(d0_km >= cfg.min_distance_km && d0_km <= cfg.macro_radius_km))
        throw ConfigError("decision d0 must lie in [min_distance_km, macro_radius_km]");
    try {
        classify_scenario(d1_km, cfg);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    Rng rng = trial_rng(cfg.seed, 0);
    SnrSampleSet samples(observe_snr_db(cfg, {d0_km, d1_km}, rng));
    const auto decision = design_ap(samples, d1_km, cfg);
    return format_decision(decision, d1_km, samples.size());
}

ExperimentResult run_experiment(const ParsedConfig& cfg) {
    const SystemConfig& sys = cfg.system;
    const RunManifest& m = cfg.manifest;
    const ExperimentParams& p = m.params;
    const fs::path dir = m.output_dir;
    const double eta = sys.ip_constraint;

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError(dir.string(), "cannot create output directory: " + ec.message());

    RunOptions opts;
    opts.threads = p.threads;
    opts.trial.bernoulli_access = p.bernoulli_access;

    ExperimentResult out;
    switch (m.experiment) {
        case Experiment::ApIpVsD1: {
            const auto reports = run_sweep(sys, {SweepParameter::D1, p.d1_grid, 0.0}, p.trials, opts);
            write_outputs(out, reports, dir, "ApIpVsD1", FigureKind::ApVsD1, FigureKind::IpVsD1, eta, true);
            const auto partial = comparator_ap(Comparator::PartialLocation, p.d1_grid.front(), sys);
            if (const auto* ni = std::get_if<NotImplemented>(&partial)) out.notes.push_back(ni->reason);
            break;
        }
        case Experiment::ApIpVsBlocks:
            for (int blocks : p.block_counts) {
                SystemConfig point = sys;
                point.blocks = blocks;
                const auto reports =
                    run_sweep(point, {SweepParameter::D1, p.d1_grid, 0.0}, p.trials, opts);
                write_outputs(out, reports, dir, "ApIpVsBlocks_I" + std::to_string(blocks),
                              FigureKind::ApVsBlocks, FigureKind::IpVsBlocks, eta, false);
            }
            break;
        case Experiment::ApVsTargetSnr:
            for (double d1 : p.target_snr_d1_km) {
                const auto reports = run_sweep(
                    sys, {SweepParameter::TargetSnr, p.target_snr_grid_db, d1}, p.trials, opts);
                const std::string stem = "ApVsTargetSnr_d1_" + tag_number(d1);
                const fs::path csv = dir / (stem + ".csv");
                write_report_csv(reports, csv);
                out.files.push_back(csv);
                const fs::path ap_script = dir / ("plot_" + stem + "_ap.py");
                emit_plot_script(csv, FigureKind::ApVsTargetSnr, eta, ap_script);
                out.files.push_back(ap_script);
                const fs::path case_script = dir / ("plot_" + stem + "_cases.py");
                emit_plot_script(csv, FigureKind::CaseProbabilities, eta, case_script);
                out.files.push_back(case_script);
            }
            break;
        case Experiment::ImperfectGammaT: {
            RunOptions imperfect = opts;
            imperfect.trial.true_target_range_db = std::make_pair(p.imperfect_low_db, p.imperfect_high_db);
            const SweepGrid grid{SweepParameter::D1, p.d1_grid, 0.0};
            const auto reports = run_sweep(sys, grid, p.trials, imperfect);
            write_outputs(out, reports, dir, "ImperfectGammaT", FigureKind::ApVsD1, FigureKind::IpVsD1,
                          eta, false);
            const auto perfect = run_sweep(sys, grid, p.trials, opts);
            write_outputs(out, perfect, dir, "ImperfectGammaT_perfect", FigureKind::ApVsD1,
                          FigureKind::IpVsD1, eta, false);
            break;
        }
        case Experiment::SingleDecision: {
            const fs::path json = dir / "decision.json";
            const std::string text = single_decision_json(sys, p.decision_d1_km, p.decision_d0_km);
            std::ofstream f(json, std::ios::binary | std::ios::trunc);
            if (!(f << text)) throw IoError(json.string(), "write failed");
            out.files.push_back(json);
            break;
        }
    }
    return out;
}

}  // namespace cogsim
