#include "cogsim/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cogsim/errors.hpp"

namespace cogsim {

namespace fs = std::filesystem;

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

namespace {

std::string case_column(const CaseKey& k) {
    return "case_" + std::string(to_string(k.scenario)) + "_" + std::string(to_string(k.tag));
}

void write_text(const fs::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out << text;
    out.flush();
    if (!out) throw IoError(path.string(), "write failed");
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string format_report_csv(std::span<const SimReport> reports) {
    std::set<CaseKey> cases;
    for (const auto& r : reports)
        for (const auto& [k, _] : r.case_histogram) cases.insert(k);

    std::string out = "sweep_param,empirical_ap,stderr_ap,empirical_ip,stderr_ip,n_trials,seed";
    for (const auto& k : cases) out += "," + case_column(k);
    out += "\n";
    for (const auto& r : reports) {
        out += format_number(r.value) + "," + format_number(r.empirical_ap) + "," +
               format_number(r.stderr_ap) + "," + format_number(r.empirical_ip) + "," +
               format_number(r.stderr_ip) + "," + std::to_string(r.n_trials) + "," +
               std::to_string(r.seed);
        for (const auto& k : cases) {
            const auto it = r.case_histogram.find(k);
            out += "," + std::to_string(it == r.case_histogram.end() ? 0 : it->second);
        }
        out += "\n";
    }
    return out;
}

void write_report_csv(std::span<const SimReport> reports, const fs::path& path) {
    if (reports.empty()) throw ConfigError("no reports to write to " + path.string());
    write_text(path, format_report_csv(reports));
}

std::string format_baseline_csv(std::span<const SimReport> reports) {
    std::string out = "sweep_param,sli_ap,sli_ip,stderr_sli_ip\n";
    for (const auto& r : reports)
        out += format_number(r.value) + "," + format_number(r.sli_ap) + "," +
               format_number(r.sli_ip) + "," + format_number(r.stderr_sli_ip) + "\n";
    return out;
}

void write_baseline_csv(std::span<const SimReport> reports, const fs::path& path) {
    if (reports.empty()) throw ConfigError("no reports to write to " + path.string());
    write_text(path, format_baseline_csv(reports));
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw ConfigError("CSV has no column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text) {
    CsvTable t;
    std::stringstream ss{std::string(text)};
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

CsvTable read_csv(const fs::path& path) { return parse_csv(read_text(path)); }

namespace {

constexpr std::pair<FigureKind, std::string_view> kFigureNames[] = {
    {FigureKind::ApVsD1, "ApVsD1"},
    {FigureKind::IpVsD1, "IpVsD1"},
    {FigureKind::ApVsBlocks, "ApVsBlocks"},
    {FigureKind::IpVsBlocks, "IpVsBlocks"},
    {FigureKind::ApVsTargetSnr, "ApVsTargetSnr"},
    {FigureKind::CaseProbabilities, "CaseProbabilities"},
};

struct FigureSpec {
    const char* column;
    const char* xlabel;
    const char* ylabel;
    bool ip_reference;
};

FigureSpec figure_spec(FigureKind k) {
    switch (k) {
        case FigureKind::ApVsD1: return {"empirical_ap", "d₁ (km)", "AP", false};
        case FigureKind::IpVsD1: return {"empirical_ip", "d₁ (km)", "IP", true};
        case FigureKind::ApVsBlocks: return {"empirical_ap", "d₁ (km)", "AP", false};
        case FigureKind::IpVsBlocks: return {"empirical_ip", "d₁ (km)", "IP", true};
        case FigureKind::ApVsTargetSnr: return {"empirical_ap", "γ_T (dB)", "AP", false};
        case FigureKind::CaseProbabilities:
            return {"", "γ_T (dB)", "probability of case", false};
    }
    return {"", "", "", false};
}

}  // namespace

std::string_view to_string(FigureKind k) {
    for (const auto& [id, name] : kFigureNames)
        if (id == k) return name;
    return "?";
}

FigureKind figure_kind_from_string(std::string_view name) {
    for (const auto& [id, n] : kFigureNames)
        if (n == name) return id;
    throw ConfigError("unknown figure kind '" + std::string(name) + "'");
}

void emit_plot_script(const fs::path& csv_path, FigureKind kind, double eta,
                      const fs::path& script_path) {
    if (!fs::exists(csv_path))
        throw IoError(csv_path.string(), "CSV not found; run the experiment that produces it first");
    const fs::path script_dir = script_path.has_parent_path() ? script_path.parent_path() : ".";
    const fs::path rel = fs::proximate(csv_path, script_dir);
    const FigureSpec spec = figure_spec(kind);
    const std::string png = script_path.stem().string() + ".png";

    std::ostringstream py;
    py << "#!/usr/bin/env python3\n"
       << "# Renders " << to_string(kind) << " from " << rel.generic_string() << ".\n"
       << "import csv\n"
       << "import pathlib\n\n"
       << "import matplotlib\n"
       << "matplotlib.use(\"Agg\")\n"
       << "import matplotlib.pyplot as plt\n\n"
       << "HERE = pathlib.Path(__file__).resolve().parent\n"
       << "DATA = HERE / \"" << rel.generic_string() << "\"\n"
       << "ETA = " << format_number(eta) << "\n\n"
       << "with open(DATA, newline=\"\") as fh:\n"
       << "    rows = list(csv.DictReader(fh))\n"
       << "x = [float(r[\"sweep_param\"]) for r in rows]\n\n"
       << "fig, ax = plt.subplots()\n";
    if (kind == FigureKind::CaseProbabilities) {
        py << "cases = [c for c in rows[0].keys() if c.startswith(\"case_\")]\n"
           << "for c in cases:\n"
           << "    ax.plot(x, [int(r[c]) / int(r[\"n_trials\"]) for r in rows], marker=\"o\",\n"
           << "            label=c[len(\"case_\"):].replace(\"_\", \" / \"))\n";
    } else {
        const std::string col = spec.column;
        const std::string err = col == "empirical_ap" ? "stderr_ap" : "stderr_ip";
        py << "y = [float(r[\"" << col << "\"]) for r in rows]\n"
           << "e = [float(r[\"" << err << "\"]) for r in rows]\n"
           << "ax.errorbar(x, y, yerr=e, marker=\"o\", capsize=2, label=\"proposed\")\n"
           << "baseline = DATA.with_name(DATA.stem + \"_sli.csv\")\n"
           << "if baseline.exists():\n"
           << "    with open(baseline, newline=\"\") as fh:\n"
           << "        b = list(csv.DictReader(fh))\n"
           << "    ax.plot([float(r[\"sweep_param\"]) for r in b],\n"
           << "            [float(r[\"" << (col == "empirical_ap" ? "sli_ap" : "sli_ip")
           << "\"]) for r in b], marker=\"s\", label=\"SLI\")\n";
    }
    if (spec.ip_reference)
        py << "ax.axhline(ETA, linestyle=\"--\", color=\"k\", label=f\"η = {ETA:g}\")\n";
    py << "ax.set_xlabel(\"" << spec.xlabel << "\")\n"
       << "ax.set_ylabel(\"" << spec.ylabel << "\")\n"
       << "ax.grid(True, alpha=0.3)\n"
       << "ax.legend()\n"
       << "fig.tight_layout()\n"
       << "fig.savefig(HERE / \"" << png << "\", dpi=150)\n";

    write_text(script_path, py.str());
    std::error_code ec;
    fs::permissions(script_path, fs::perms::owner_exec | fs::perms::group_exec, fs::perm_options::add, ec);
}

std::string format_decision(const ApDecision& d, double d1_km, std::size_t sample_count) {
    nlohmann::ordered_json j;
    j["d1_km"] = d1_km;
    j["sample_count"] = sample_count;
    j["scenario"] = std::string(to_string(d.scenario_case.scenario));
    j["case"] = std::string(to_string(d.scenario_case.tag));
    j["inner_index"] = d.scenario_case.inner.to_string();
    j["outer_index"] = d.scenario_case.outer.to_string();
    j["region_area_km2"] = d.areas.region_km2;
    j["interference_area_km2"] = d.areas.interference_km2;
    j["region_prob_upper"] = d.region_prob_upper;
    j["rho_ap"] = d.access_probability;
    return j.dump(2) + "\n";
}

}  // namespace cogsim
