#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cogsim/ap_design.hpp"
#include "cogsim/simulator.hpp"

namespace cogsim {

/// CSV with header
///   sweep_param,empirical_ap,stderr_ap,empirical_ip,stderr_ip,n_trials,seed
/// followed by one case_<scenario>_<case> count column per case observed in
/// any report. Rows follow the input order; floats use 10 significant digits.
std::string format_report_csv(std::span<const SimReport> reports);

/// Writes format_report_csv to `path`. Throws ConfigError for an empty report
/// list and IoError naming the path on write failure.
void write_report_csv(std::span<const SimReport> reports, const std::filesystem::path& path);

/// Baseline companion table: sweep_param,sli_ap,sli_ip,stderr_sli_ip.
std::string format_baseline_csv(std::span<const SimReport> reports);
void write_baseline_csv(std::span<const SimReport> reports, const std::filesystem::path& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws ConfigError if the column does not exist.
    std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

enum class FigureKind { ApVsD1, IpVsD1, ApVsBlocks, IpVsBlocks, ApVsTargetSnr, CaseProbabilities };

std::string_view to_string(FigureKind k);
/// Throws ConfigError for an unknown name.
FigureKind figure_kind_from_string(std::string_view name);

/// Writes a standalone matplotlib script next to `script_path` that reads
/// `csv_path` (referenced relative to the script) and renders the figure.
/// IP figures draw a dashed reference line at `eta`. Throws IoError naming
/// the CSV if it does not exist.
void emit_plot_script(const std::filesystem::path& csv_path, FigureKind kind, double eta,
                      const std::filesystem::path& script_path);

/// Key/value JSON rendering of a single design decision.
std::string format_decision(const ApDecision& d, double d1_km, std::size_t sample_count);

/// printf-style %.10g.
std::string format_number(double v);

}  // namespace cogsim
