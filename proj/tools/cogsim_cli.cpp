// cogsim: run coexistence experiments or a single access-probability design.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cogsim/errors.hpp"
#include "cogsim/experiments.hpp"
#include "cogsim/learner.hpp"
#include "cogsim/report_io.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kRuntime = 3, kIo = 4 };

struct CommonFlags {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> mode;
    std::vector<std::string> sets;
};

std::map<std::string, std::string> collect_overrides(const CommonFlags& f) {
    std::map<std::string, std::string> ov;
    for (const auto& kv : f.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw cogsim::ConfigError("--set expects key=value, got '" + kv + "'");
        ov[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (f.out) ov["run.output_dir"] = "\"" + *f.out + "\"";
    if (f.seed) ov["run.seed"] = std::to_string(*f.seed);
    if (f.trials) ov["run.trials"] = std::to_string(*f.trials);
    if (f.mode) ov["system.measurement.mode"] = "\"" + *f.mode + "\"";
    return ov;
}

cogsim::ParsedConfig load(const CommonFlags& f, std::map<std::string, std::string> ov) {
    if (f.config.empty()) return cogsim::parse_config("", ov);
    return cogsim::load_config(f.config, ov);
}

std::vector<double> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cogsim::IoError(path, "cannot open samples file");
    std::vector<double> xs;
    std::string tok;
    while (in >> tok) {
        for (auto& c : tok)
            if (c == ',') c = ' ';
        std::istringstream ts(tok);
        double v;
        while (ts >> v) xs.push_back(v);
        if (!ts.eof()) throw cogsim::ConfigError("samples file " + path + ": '" + tok + "' is not a number");
    }
    return xs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learning-based underlay access design for a cognitive small base station"};
    app.require_subcommand(1);

    CommonFlags flags;
    auto add_common = [&flags](CLI::App* sub) {
        sub->add_option("--config", flags.config, "JSON configuration file")->check(CLI::ExistingFile);
        sub->add_option("--seed", flags.seed, "master seed");
        sub->add_option("--mode", flags.mode, "SNR measurement model")
            ->check(CLI::IsMember({"ideal", "noisy"}));
        sub->add_option("--set", flags.sets, "override a config key, e.g. --set system.blocks=100");
    };

    auto* run = app.add_subcommand("run", "run an experiment and write CSVs and plot scripts");
    std::string experiment;
    std::string d1_list;
    run->add_option("experiment", experiment,
                    "ApIpVsD1 | ApIpVsBlocks | ApVsTargetSnr | ImperfectGammaT | SingleDecision")
        ->required();
    run->add_option("--out", flags.out, "output directory");
    run->add_option("--trials", flags.trials, "trials per grid point");
    run->add_option("--d1", d1_list, "comma-separated d1 grid in km");
    add_common(run);

    auto* decide = app.add_subcommand("decide", "design the access probability for one episode");
    std::optional<double> d1;
    std::optional<double> d0;
    std::string samples_path;
    decide->add_option("--d1", d1, "MBS to C-SBS distance in km")->required();
    auto* d0_opt = decide->add_option("--d0", d0, "MBS to MU distance in km (simulated episode)");
    auto* samples_opt =
        decide->add_option("--samples", samples_path, "file of measured SNR samples in dB");
    d0_opt->excludes(samples_opt);
    samples_opt->excludes(d0_opt);
    add_common(decide);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        auto ov = collect_overrides(flags);
        if (run->parsed()) {
            ov["run.experiment"] = "\"" + experiment + "\"";
            if (!d1_list.empty()) ov["run.d1_grid"] = d1_list.find(',') == std::string::npos
                                                          ? d1_list
                                                          : "[" + d1_list + "]";
            const auto cfg = load(flags, ov);
            const auto result = cogsim::run_experiment(cfg);
            for (const auto& f : result.files) std::cout << f.string() << "\n";
            for (const auto& n : result.notes) std::cerr << "note: " << n << "\n";
        } else {
            const auto cfg = load(flags, ov);
            if (!samples_path.empty()) {
                cogsim::SnrSampleSet samples(read_samples(samples_path));
                const auto decision = cogsim::design_ap(samples, *d1, cfg.system);
                std::cout << cogsim::format_decision(decision, *d1, samples.size());
            } else {
                if (!d0) throw cogsim::ConfigError("decide needs --d0 or --samples");
                std::cout << cogsim::single_decision_json(cfg.system, *d1, *d0);
            }
        }
    } catch (const cogsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const cogsim::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntime;
    }
    return kOk;
}
