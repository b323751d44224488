#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "cogsim/errors.hpp"
#include "cogsim/experiments.hpp"
#include "cogsim/report_io.hpp"

using namespace cogsim;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const char* env = std::getenv("COGSIM_TMP");
    const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "cogsim_report_test";
    const fs::path p = root / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SimReport make_report(double v, double ap) {
    SimReport r{};
    r.parameter = SweepParameter::D1;
    r.value = v;
    r.empirical_ap = ap;
    r.stderr_ap = 0.0012345678912345;
    r.empirical_ip = 0.009876543210987;
    r.stderr_ip = 1.5e-4;
    r.n_trials = 10000;
    r.seed = 3;
    r.case_histogram[{Scenario::II, CaseTag::IV}] = 7000;
    r.case_histogram[{Scenario::II, CaseTag::II}] = 3000;
    return r;
}

}  // namespace

TEST_CASE("report csv layout") {
    const std::vector<SimReport> reports{make_report(0.1, 0.7563), make_report(0.12, 2.0 / 3.0)};
    const std::string csv = format_report_csv(reports);
    std::istringstream in(csv);
    std::string header, row1, row2, extra;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK_FALSE(static_cast<bool>(std::getline(in, extra)));
    CHECK(header ==
          "sweep_param,empirical_ap,stderr_ap,empirical_ip,stderr_ip,n_trials,seed,case_II_II,case_II_IV");
    CHECK(row1 == "0.1,0.7563,0.001234567891,0.009876543211,0.00015,10000,3,3000,7000");
    CHECK(row2.rfind("0.12,0.6666666667,", 0) == 0);
}

TEST_CASE("case columns cover every observed case") {
    auto a = make_report(0.1, 0.5);
    auto b = make_report(0.2, 0.5);
    b.case_histogram[{Scenario::I, CaseTag::VI}] = 1;
    const std::vector<SimReport> reports{a, b};
    const auto t = parse_csv(format_report_csv(reports));
    const auto col = t.column("case_I_VI");
    CHECK(t.header[col - 1] == "seed");
    CHECK(t.rows[0][col] == "0");
    CHECK(t.rows[1][col] == "1");
    CHECK_THROWS_AS(t.column("case_III_I"), ConfigError);
}

TEST_CASE("csv round trip and writing") {
    const auto dir = scratch("roundtrip");
    const std::vector<SimReport> reports{make_report(0.34, 0.123456789012345), make_report(0.36, 0.5)};
    write_report_csv(reports, dir / "r.csv");
    const auto t = read_csv(dir / "r.csv");
    REQUIRE(t.rows.size() == 2);
    const double ap = std::stod(t.rows[0][t.column("empirical_ap")]);
    CHECK(ap == doctest::Approx(0.123456789012345).epsilon(1e-10));
    CHECK(std::stod(t.rows[1][t.column("sweep_param")]) == 0.36);

    write_report_csv(reports, dir / "r2.csv");
    CHECK(slurp(dir / "r.csv") == slurp(dir / "r2.csv"));

    CHECK_THROWS_AS(write_report_csv({}, dir / "empty.csv"), ConfigError);
    fs::create_directories(dir / "blocked.csv");
    CHECK_THROWS_AS(write_report_csv(reports, dir / "blocked.csv"), IoError);

    write_baseline_csv(reports, dir / "r_sli.csv");
    const auto b = read_csv(dir / "r_sli.csv");
    CHECK(b.header == std::vector<std::string>{"sweep_param", "sli_ap", "sli_ip", "stderr_sli_ip"});
}

TEST_CASE("plot scripts") {
    const auto dir = scratch("plots");
    const std::vector<SimReport> reports{make_report(0.1, 0.7)};
    write_report_csv(reports, dir / "data" / "ApIpVsD1.csv");

    emit_plot_script(dir / "data" / "ApIpVsD1.csv", FigureKind::ApVsD1, 0.01, dir / "ap.py");
    const std::string ap = slurp(dir / "ap.py");
    CHECK(ap.find("data/ApIpVsD1.csv") != std::string::npos);
    CHECK(ap.find("\"empirical_ap\"") != std::string::npos);
    CHECK(ap.find("\"sweep_param\"") != std::string::npos);
    CHECK(ap.find("set_ylabel(\"AP\")") != std::string::npos);
    CHECK(ap.find("d₁ (km)") != std::string::npos);
    CHECK(ap.find("axhline") == std::string::npos);
    CHECK(ap.find(dir.string()) == std::string::npos);

    emit_plot_script(dir / "data" / "ApIpVsD1.csv", FigureKind::IpVsD1, 0.01, dir / "ip.py");
    const std::string ip = slurp(dir / "ip.py");
    CHECK(ip.find("\"empirical_ip\"") != std::string::npos);
    CHECK(ip.find("axhline(ETA") != std::string::npos);
    CHECK(ip.find("ETA = 0.01") != std::string::npos);

    CHECK_THROWS_WITH_AS(emit_plot_script(dir / "nope.csv", FigureKind::ApVsD1, 0.01, dir / "x.py"),
                         doctest::Contains("nope.csv"), IoError);
    CHECK_THROWS_AS(figure_kind_from_string("ApVsD2"), ConfigError);
    CHECK(figure_kind_from_string("CaseProbabilities") == FigureKind::CaseProbabilities);
}

TEST_CASE("experiments write under the output directory only") {
    const auto dir = scratch("experiment");
    auto cfg = parse_config("", {{"run.d1_grid", "0.1,0.3"},
                                 {"run.trials", "50"},
                                 {"run.output_dir", "\"" + (dir / "out").string() + "\""}});
    const auto res = run_experiment(cfg);
    REQUIRE(res.files.size() == 4);
    for (const auto& f : res.files) {
        CHECK(fs::exists(f));
        CHECK(f.parent_path() == dir / "out");
    }
    CHECK(fs::exists(dir / "out" / "ApIpVsD1.csv"));
    CHECK(fs::exists(dir / "out" / "ApIpVsD1_sli.csv"));
    CHECK(read_csv(dir / "out" / "ApIpVsD1.csv").rows.size() == 2);
    CHECK_FALSE(res.notes.empty());
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);

    cfg.manifest.experiment = Experiment::SingleDecision;
    const auto single = run_experiment(cfg);
    REQUIRE(single.files.size() == 1);
    const std::string json = slurp(single.files[0]);
    CHECK(json.find("\"rho_ap\"") != std::string::npos);
    CHECK(json.find("\"scenario\": \"II\"") != std::string::npos);

    cfg.manifest.experiment = Experiment::ApIpVsBlocks;
    cfg.manifest.params.block_counts = {5, 10};
    const auto blocks = run_experiment(cfg);
    CHECK(fs::exists(dir / "out" / "ApIpVsBlocks_I5.csv"));
    CHECK(fs::exists(dir / "out" / "ApIpVsBlocks_I10.csv"));

    cfg.manifest.experiment = Experiment::ApVsTargetSnr;
    cfg.manifest.params.target_snr_grid_db = {15, 25};
    cfg.manifest.params.target_snr_d1_km = {0.25};
    run_experiment(cfg);
    CHECK(fs::exists(dir / "out" / "ApVsTargetSnr_d1_0p25.csv"));

    cfg.manifest.experiment = Experiment::ImperfectGammaT;
    run_experiment(cfg);
    CHECK(fs::exists(dir / "out" / "ImperfectGammaT.csv"));
    CHECK(fs::exists(dir / "out" / "ImperfectGammaT_perfect.csv"));
}
