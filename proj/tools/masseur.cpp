#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "masseur/config.hpp"
#include "masseur/errors.hpp"
#include "masseur/trace_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace masseur;

namespace {

enum class LogLevel { Error = 0, Warn, Info, Debug };

LogLevel log_level() {
    const char* env = std::getenv("MASSEUR_LOG");
    if (!env) return LogLevel::Warn;
    const std::string v = env;
    if (v == "error") return LogLevel::Error;
    if (v == "warn") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

void log(LogLevel level, const std::string& msg) {
    static const LogLevel threshold = log_level();
    if (level > threshold) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

json stats_to_json(const TraceStats& s) {
    json j;
    j["max"] = s.max;
    j["min"] = s.min;
    j["mean"] = s.mean;
    j["std"] = s.std;
    j["skew"] = s.skew ? json(*s.skew) : json(nullptr);
    j["kurt"] = s.kurt ? json(*s.kurt) : json(nullptr);
    j["freq"] = s.freq ? json(*s.freq) : json(nullptr);
    return j;
}

TraceStats stats_from_json(const json& j) {
    TraceStats s;
    s.max = j.at("max").get<double>();
    s.min = j.at("min").get<double>();
    s.mean = j.at("mean").get<double>();
    s.std = j.at("std").get<double>();
    if (j.contains("skew") && !j["skew"].is_null()) s.skew = j["skew"].get<double>();
    if (j.contains("kurt") && !j["kurt"].is_null()) s.kurt = j["kurt"].get<double>();
    if (j.contains("freq") && !j["freq"].is_null()) s.freq = j["freq"].get<double>();
    return s;
}

void write_json(const json& j, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << j.dump() << "\n";
}

std::optional<Window> parse_window(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ConfigError("window must be t0:t1, got '" + spec + "'");
    return Window{std::stod(spec.substr(0, colon)), std::stod(spec.substr(colon + 1))};
}

std::string active_technique(const SimConfig& cfg) {
    if (std::holds_alternative<BeatParams>(cfg.technique.params)) return "beat";
    if (std::holds_alternative<PressParams>(cfg.technique.params)) return "press";
    if (std::holds_alternative<PushParams>(cfg.technique.params)) return "push";
    return "vibrate";
}

json run_summary(const SimConfig& cfg, const SimResult& result) {
    json summary;
    summary["technique"] = active_technique(cfg);
    summary["duration_s"] = cfg.technique.duration;
    summary["sample_rate_hz"] = result.trace.sample_rate;
    if (result.activation_time) summary["activation_time_s"] = *result.activation_time;
    if (result.steady_state_force_error)
        summary["steady_state_force_error_n"] = *result.steady_state_force_error;
    return summary;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    const RunConfig cfg = load_run_config(config_path);
    log(LogLevel::Info, "running " + active_technique(cfg.sim) + " for " +
                            std::to_string(cfg.sim.technique.duration) + " s");
    const SimResult result = run_simulation(cfg.sim);
    fs::create_directories(out_dir);
    export_trace(result, fs::path(out_dir) / "trace.csv");
    write_json(run_summary(cfg.sim, result), fs::path(out_dir) / "summary.json");
    return 0;
}

int cmd_analyze(const std::string& trace_path, const std::string& out_dir,
                const std::string& window_spec) {
    const ForceTrace trace = read_trace_csv(fs::path(trace_path));
    const auto window = parse_window(window_spec);
    const TraceStats stats = trace_stats(trace, window);

    fs::create_directories(out_dir);
    json j = stats_to_json(stats);
    if (!stats.skew) {
        j["warning"] = "zero variance: skew/kurt undefined";
        log(LogLevel::Warn, "trace has zero variance; skew/kurt omitted");
    }
    write_json(j, fs::path(out_dir) / "stats.json");
    export_spectrum(trace, window, fs::path(out_dir) / "spectrum.csv");
    return 0;
}

int cmd_compare(const std::string& stats_path, const std::string& technique,
                const std::string& reference, const std::string& tol_path) {
    std::ifstream in(stats_path);
    if (!in) throw IoError("cannot open " + stats_path);
    json j;
    in >> j;
    const TraceStats stats = stats_from_json(j);

    if (reference != "expert" && reference != "robot")
        throw ConfigError("reference must be expert or robot, got '" + reference + "'");
    const auto source =
        reference == "expert" ? ReferenceSource::Expert : ReferenceSource::Robot;
    const Technique tech = technique_from_name(technique);

    Tolerances tol;
    if (!tol_path.empty()) {
        std::ifstream tin(tol_path);
        if (!tin) throw IoError("cannot open " + tol_path);
        json tj;
        tin >> tj;
        if (tj.contains("rel_envelope")) tol.rel_envelope = tj["rel_envelope"].get<double>();
        if (tj.contains("abs_freq")) tol.abs_freq = tj["abs_freq"].get<double>();
    }

    const ComparisonReport report = compare_to_reference(stats, tech, source, tol);
    json out;
    out["technique"] = technique_name(report.technique);
    out["reference"] = reference;
    json fields;
    for (const auto& [name, fc] : report.fields) {
        json f;
        f["value"] = fc.value ? json(*fc.value) : json(nullptr);
        f["ref"] = fc.ref ? json(*fc.ref) : json(nullptr);
        f["delta"] = fc.delta ? json(*fc.delta) : json(nullptr);
        f["rel_delta"] = fc.rel_delta ? json(*fc.rel_delta) : json(nullptr);
        f["pass"] = fc.pass;
        fields[name] = f;
    }
    out["fields"] = fields;
    out["all_pass"] = report.all_pass;
    write_json(out, "report.json");
    std::cout << out.dump(2) << "\n";
    return report.all_pass ? 0 : 1;
}

int cmd_sweep(const std::string& config_path, const std::string& param,
              const std::vector<std::string>& values, const std::string& out_dir) {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    const ConfigMap base = parse_ini_file(config_path);

    fs::create_directories(out_dir);
    std::ofstream csv(fs::path(out_dir) / "sweep.csv", std::ios::binary);
    if (!csv) throw IoError("cannot open sweep.csv for writing");
    csv << "value,steady_state_force_error,max,min,mean,std,skew,kurt,freq\n";

    for (const auto& value : values) {
        ConfigMap cm = base;
        set_config_value(cm, param, value);
        const RunConfig cfg = build_run_config(cm);

        const fs::path subdir = fs::path(out_dir) / (param + "=" + value);
        fs::create_directories(subdir);
        log(LogLevel::Info, "sweep " + param + " = " + value);

        const SimResult result = run_simulation(cfg.sim);
        export_trace(result, subdir / "trace.csv");
        write_json(run_summary(cfg.sim, result), subdir / "summary.json");

        // Stats over the post-warm-up window.
        const double cycle = technique_cycle(cfg.sim.technique);
        const TraceStats stats =
            trace_stats(result.trace, Window{cycle, cfg.sim.technique.duration});

        auto opt = [](const std::optional<double>& v) {
            return v ? std::to_string(*v) : std::string("");
        };
        csv << value << ','
            << (result.steady_state_force_error ? std::to_string(*result.steady_state_force_error)
                                                : std::string(""))
            << ',' << stats.max << ',' << stats.min << ',' << stats.mean << ',' << stats.std
            << ',' << opt(stats.skew) << ',' << opt(stats.kurt) << ',' << opt(stats.freq)
            << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Massage technique simulator and force-trace analyzer"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", trace_path, window_spec;
    std::string stats_path, technique, reference = "expert", tol_path;
    std::string param;
    std::vector<std::string> values;

    auto* run = app.add_subcommand("run", "Simulate a technique from a config file");
    run->add_option("config", config_path, "Run config file")->required();
    run->add_option("-o,--out", out_dir, "Output directory");

    auto* analyze = app.add_subcommand("analyze", "Characterize a trace CSV");
    analyze->add_option("trace", trace_path, "Trace CSV path")->required();
    analyze->add_option("-o,--out", out_dir, "Output directory");
    analyze->add_option("--window", window_spec, "Analysis window t0:t1 (s)");

    auto* compare = app.add_subcommand("compare", "Compare stats against a reference table");
    compare->add_option("stats", stats_path, "stats.json path")->required();
    compare->add_option("--technique", technique, "beat|press|push|vibrate")->required();
    compare->add_option("--ref", reference, "expert|robot");
    compare->add_option("--tol", tol_path, "Tolerance overrides (JSON)");

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    sweep->add_option("config", config_path, "Run config file")->required();
    sweep->add_option("--param", param, "Parameter as section.key")->required();
    sweep->add_option("--values", values, "Comma-separated values")
        ->required()
        ->delimiter(',');
    sweep->add_option("-o,--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir);
        if (analyze->parsed()) return cmd_analyze(trace_path, out_dir, window_spec);
        if (compare->parsed()) return cmd_compare(stats_path, technique, reference, tol_path);
        if (sweep->parsed()) return cmd_sweep(config_path, param, values, out_dir);
    } catch (const UnstableSimulation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
