#include "cogsim/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cogsim/errors.hpp"
#include "cogsim/simulator.hpp"

namespace cogsim {

using nlohmann::json;

namespace {

constexpr std::pair<Experiment, std::string_view> kExperimentNames[] = {
    {Experiment::ApIpVsD1, "ApIpVsD1"},
    {Experiment::ApIpVsBlocks, "ApIpVsBlocks"},
    {Experiment::ApVsTargetSnr, "ApVsTargetSnr"},
    {Experiment::ImperfectGammaT, "ImperfectGammaT"},
    {Experiment::SingleDecision, "SingleDecision"},
};

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"system",
         {"macro_radius_km", "small_radius_km", "min_distance_km", "noise_power_dbm",
          "target_snr_db", "ip_constraint_eta", "shadow_sigma_db", "blocks", "subblocks",
          "measurement"}},
        {"system.measurement", {"mode", "samples_per_subblock"}},
        {"run",
         {"experiment", "output_dir", "seed", "trials", "d1_grid", "block_counts",
          "target_snr_grid_db", "target_snr_d1_km", "imperfect_target_db", "bernoulli_access",
          "threads", "decision_d1_km", "decision_d0_km"}},
    };
    return keys;
}

void check_keys(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
    const auto& allowed = known_keys().at(where);
    for (const auto& [k, _] : obj.items())
        if (!allowed.count(k)) throw ConfigError("unknown key '" + where + "." + k + "'");
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
    const bool blank = std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isspace(c); });
    if (blank) return json::object();
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error at " + line_col(text, e.byte) + ": " + e.what());
    }
}

// CLI values arrive as text: JSON literals are taken as-is, comma lists become
// arrays, anything else is a string.
json override_value(const std::string& raw) {
    try {
        return json::parse(raw);
    } catch (const json::parse_error&) {
    }
    if (raw.find(',') != std::string::npos) {
        json arr = json::array();
        std::stringstream ss(raw);
        std::string item;
        while (std::getline(ss, item, ',')) arr.push_back(override_value(item));
        return arr;
    }
    return raw;
}

void apply_override(json& doc, const std::string& dotted, const std::string& raw) {
    json* node = &doc;
    std::stringstream ss(dotted);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    if (parts.empty()) throw ConfigError("empty override key");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!node->is_object()) throw ConfigError("override '" + dotted + "' crosses a non-object");
        node = &(*node)[parts[i]];
        if (node->is_null()) *node = json::object();
    }
    (*node)[parts.back()] = override_value(raw);
}

template <class T>
T get_or(const json& obj, const char* key, const std::string& where, T fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ConfigError("key '" + where + "." + key + "' has the wrong type");
    }
}

std::vector<double> parse_grid(const json& v, const std::string& key) {
    if (v.is_array()) {
        std::vector<double> out;
        for (const auto& x : v) {
            if (!x.is_number()) throw ConfigError("'" + key + "' must contain numbers");
            out.push_back(x.get<double>());
        }
        if (out.empty()) throw ConfigError("'" + key + "' must not be empty");
        return out;
    }
    if (v.is_number()) return {v.get<double>()};
    if (v.is_object()) {
        for (const char* k : {"start", "stop", "step"})
            if (!v.contains(k) || !v[k].is_number())
                throw ConfigError("'" + key + "' range needs numeric start, stop and step");
        return linear_grid(v["start"].get<double>(), v["stop"].get<double>(),
                           v["step"].get<double>());
    }
    throw ConfigError("'" + key + "' must be a number, an array or {start, stop, step}");
}

MeasurementMode mode_from_string(const std::string& s) {
    if (s == "ideal") return MeasurementMode::Ideal;
    if (s == "noisy") return MeasurementMode::Noisy;
    throw ConfigError("measurement mode must be 'ideal' or 'noisy', got '" + s + "'");
}

}  // namespace

std::string_view to_string(Experiment e) {
    for (const auto& [id, name] : kExperimentNames)
        if (id == e) return name;
    return "?";
}

Experiment experiment_from_string(std::string_view name) {
    for (const auto& [id, n] : kExperimentNames)
        if (n == name) return id;
    std::string valid;
    for (const auto& [id, n] : kExperimentNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw ConfigError("unknown experiment '" + std::string(name) + "' (expected one of " + valid + ")");
}

ExperimentParams::ExperimentParams()
    : d1_grid(linear_grid(0.04, 0.6, 0.02)), target_snr_grid_db(linear_grid(10.0, 30.0, 2.0)) {}

ParsedConfig parse_config(std::string_view text, const std::map<std::string, std::string>& overrides) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    for (const auto& [k, v] : overrides) apply_override(doc, k, v);

    for (const auto& [k, _] : doc.items())
        if (k != "system" && k != "run") throw ConfigError("unknown key '" + k + "'");

    ParsedConfig out;
    SystemConfig& s = out.system;
    RunManifest& m = out.manifest;
    m.overrides = overrides;

    const json sys = doc.value("system", json::object());
    check_keys(sys, "system");
    s.macro_radius_km = get_or(sys, "macro_radius_km", "system", s.macro_radius_km);
    s.small_radius_km = get_or(sys, "small_radius_km", "system", s.small_radius_km);
    s.min_distance_km = get_or(sys, "min_distance_km", "system", s.min_distance_km);
    s.noise_power_mw = dbm_to_mw(get_or(sys, "noise_power_dbm", "system", -114.0));
    s.target_snr_db = get_or(sys, "target_snr_db", "system", s.target_snr_db);
    s.ip_constraint = get_or(sys, "ip_constraint_eta", "system", s.ip_constraint);
    s.shadow_sigma_db = get_or(sys, "shadow_sigma_db", "system", s.shadow_sigma_db);
    s.blocks = get_or(sys, "blocks", "system", s.blocks);
    s.subblocks = get_or(sys, "subblocks", "system", s.subblocks);
    const json meas = sys.value("measurement", json::object());
    check_keys(meas, "system.measurement");
    s.mode = mode_from_string(get_or<std::string>(meas, "mode", "system.measurement", "noisy"));
    s.samples_per_subblock =
        get_or(meas, "samples_per_subblock", "system.measurement", s.samples_per_subblock);

    const json run = doc.value("run", json::object());
    check_keys(run, "run");
    auto& p = m.params;
    m.experiment = experiment_from_string(get_or<std::string>(run, "experiment", "run", "ApIpVsD1"));
    m.output_dir = get_or(run, "output_dir", "run", m.output_dir);
    m.seed = get_or(run, "seed", "run", m.seed);
    const auto trials = get_or<long long>(run, "trials", "run", static_cast<long long>(p.trials));
    if (trials <= 0) throw ConfigError("run.trials must be positive");
    p.trials = static_cast<std::size_t>(trials);
    if (run.contains("d1_grid")) p.d1_grid = parse_grid(run["d1_grid"], "run.d1_grid");
    if (run.contains("target_snr_grid_db"))
        p.target_snr_grid_db = parse_grid(run["target_snr_grid_db"], "run.target_snr_grid_db");
    if (run.contains("target_snr_d1_km"))
        p.target_snr_d1_km = parse_grid(run["target_snr_d1_km"], "run.target_snr_d1_km");
    if (run.contains("block_counts")) {
        p.block_counts.clear();
        for (double v : parse_grid(run["block_counts"], "run.block_counts")) {
            if (v < 1 || v != static_cast<int>(v))
                throw ConfigError("run.block_counts entries must be positive integers");
            p.block_counts.push_back(static_cast<int>(v));
        }
    }
    if (run.contains("imperfect_target_db")) {
        const auto lohi = parse_grid(run["imperfect_target_db"], "run.imperfect_target_db");
        if (lohi.size() != 2 || !(lohi[0] <= lohi[1]))
            throw ConfigError("run.imperfect_target_db must be [low, high] with low <= high");
        p.imperfect_low_db = lohi[0];
        p.imperfect_high_db = lohi[1];
    }
    p.bernoulli_access = get_or(run, "bernoulli_access", "run", p.bernoulli_access);
    p.threads = get_or(run, "threads", "run", p.threads);
    p.decision_d1_km = get_or(run, "decision_d1_km", "run", p.decision_d1_km);
    p.decision_d0_km = get_or(run, "decision_d0_km", "run", p.decision_d0_km);

    s.seed = m.seed;
    s.validate();
    return out;
}

ParsedConfig load_config(const std::filesystem::path& path,
                         const std::map<std::string, std::string>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parsed = parse_config(buf.str(), overrides);
    parsed.manifest.config_path = path.string();
    return parsed;
}

std::string serialize_config(const ParsedConfig& cfg) {
    const auto& s = cfg.system;
    const auto& m = cfg.manifest;
    const auto& p = m.params;
    json doc;
    doc["system"] = {
        {"macro_radius_km", s.macro_radius_km},
        {"small_radius_km", s.small_radius_km},
        {"min_distance_km", s.min_distance_km},
        {"noise_power_dbm", mw_to_dbm(s.noise_power_mw)},
        {"target_snr_db", s.target_snr_db},
        {"ip_constraint_eta", s.ip_constraint},
        {"shadow_sigma_db", s.shadow_sigma_db},
        {"blocks", s.blocks},
        {"subblocks", s.subblocks},
        {"measurement",
         {{"mode", std::string(to_string(s.mode))}, {"samples_per_subblock", s.samples_per_subblock}}},
    };
    doc["run"] = {
        {"experiment", std::string(to_string(m.experiment))},
        {"output_dir", m.output_dir},
        {"seed", m.seed},
        {"trials", p.trials},
        {"d1_grid", p.d1_grid},
        {"block_counts", p.block_counts},
        {"target_snr_grid_db", p.target_snr_grid_db},
        {"target_snr_d1_km", p.target_snr_d1_km},
        {"imperfect_target_db", {p.imperfect_low_db, p.imperfect_high_db}},
        {"bernoulli_access", p.bernoulli_access},
        {"threads", p.threads},
        {"decision_d1_km", p.decision_d1_km},
        {"decision_d0_km", p.decision_d0_km},
    };
    return doc.dump(2) + "\n";
}

}  // namespace cogsim
