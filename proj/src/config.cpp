#include "masseur/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "masseur/errors.hpp"

namespace masseur {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& section, const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE)
        throw ConfigError(section + "." + key + ": bad number '" + value + "'");
    return v;
}

int to_int(const std::string& section, const std::string& key, const std::string& value) {
    const double v = to_double(section, key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(section + "." + key + ": expected an integer, got '" + value + "'");
    return i;
}

// Reads keys out of one section, tracking consumption so leftovers can be
// rejected as typos.
class SectionReader {
public:
    SectionReader(const ConfigMap& cfg, std::string section) : section_(std::move(section)) {
        if (auto it = cfg.find(section_); it != cfg.end()) entries_ = &it->second;
    }

    bool present() const { return entries_ != nullptr; }

    std::optional<std::string> raw(const std::string& key) {
        if (!entries_) return std::nullopt;
        auto it = entries_->find(key);
        if (it == entries_->end()) return std::nullopt;
        seen_.insert(key);
        return it->second;
    }

    void number(const std::string& key, double& out) {
        if (auto v = raw(key)) out = to_double(section_, key, *v);
    }

    void integer(const std::string& key, int& out) {
        if (auto v = raw(key)) out = to_int(section_, key, *v);
    }

    void reject_unknown() const {
        if (!entries_) return;
        for (const auto& [key, value] : *entries_)
            if (!seen_.contains(key))
                throw ConfigError(section_ + "." + key + ": unknown key");
    }

private:
    std::string section_;
    const std::map<std::string, std::string>* entries_ = nullptr;
    std::set<std::string> seen_;
};

}  // namespace

ConfigMap parse_ini(std::istream& in) {
    ConfigMap cfg;
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            cfg[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        cfg[section][key] = value;
    }
    return cfg;
}

ConfigMap parse_ini_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_ini(in);
}

void set_config_value(ConfigMap& cfg, const std::string& dotted_key, const std::string& value) {
    const auto dot = dotted_key.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == dotted_key.size())
        throw ConfigError("parameter '" + dotted_key + "' must be section.key");
    cfg[dotted_key.substr(0, dot)][dotted_key.substr(dot + 1)] = value;
}

RunConfig build_run_config(const ConfigMap& cfg) {
    static const std::set<std::string> known_sections = {
        "sim", "admittance", "skin", "beat", "press", "push", "vibrate", "analysis"};
    for (const auto& [section, entries] : cfg)
        if (!known_sections.contains(section))
            throw ConfigError(section + ": unknown section");

    RunConfig run;

    SectionReader sim(cfg, "sim");
    if (!sim.present()) throw ConfigError("sim: section is required");
    const auto technique = sim.raw("technique");
    if (!technique) throw ConfigError("sim.technique: required");
    double duration = 0.0;
    sim.number("duration_s", duration);
    if (!(duration > 0.0)) throw ConfigError("sim.duration_s: required and > 0");
    double seed = 0.0;
    sim.number("seed", seed);
    run.sim.seed = static_cast<std::uint64_t>(seed);
    sim.reject_unknown();

    SectionReader adm(cfg, "admittance");
    adm.number("m", run.sim.admittance.m);
    adm.number("b", run.sim.admittance.b);
    adm.number("sigma", run.sim.admittance.sigma);
    adm.number("period_s", run.sim.admittance.T);
    adm.reject_unknown();

    SectionReader skin(cfg, "skin");
    skin.number("k", run.sim.skin.k);
    skin.number("n", run.sim.skin.n);
    skin.number("c", run.sim.skin.c);
    skin.number("z_surface", run.sim.skin.z_surface);
    skin.reject_unknown();

    const Technique selected = technique_from_name(*technique);
    SectionReader beat(cfg, "beat");
    SectionReader press(cfg, "press");
    SectionReader push(cfg, "push");
    SectionReader vibrate(cfg, "vibrate");

    switch (selected) {
        case Technique::Beat: {
            BeatParams p;
            beat.number("rot_x_deg", p.rot_x_deg);
            beat.number("dx", p.dx);
            beat.number("dz", p.dz);
            beat.number("stroke_duration", p.stroke_duration);
            beat.number("corr_amp_deg", p.corr_amp_deg);
            beat.number("corr_omega", p.corr_omega);
            beat.number("corr_delta_deg", p.corr_delta_deg);
            beat.integer("n_arms", p.n_arms);
            run.sim.technique.params = p;
            break;
        }
        case Technique::Press: {
            PressParams p;
            press.number("f_max", p.f_max);
            press.number("f_min", p.f_min);
            press.number("hold_peak", p.hold_peak);
            press.number("hold_trough", p.hold_trough);
            press.number("sine_period", p.sine_period);
            run.sim.technique.params = p;
            break;
        }
        case Technique::Push: {
            PushParams p;
            push.number("y0", p.y0);
            push.number("z0", p.z0);
            push.number("amp", p.amp);
            push.number("omega", p.omega);
            push.number("f_push", p.f_push);
            run.sim.technique.params = p;
            break;
        }
        case Technique::Vibrate: {
            VibrateParams p;
            vibrate.number("f_activate", p.f_activate);
            vibrate.number("vib_freq", p.vib_freq);
            vibrate.number("vib_amp", p.vib_amp);
            run.sim.technique.params = p;
            break;
        }
    }
    run.sim.technique.duration = duration;
    beat.reject_unknown();
    press.reject_unknown();
    push.reject_unknown();
    vibrate.reject_unknown();

    SectionReader analysis(cfg, "analysis");
    double w0 = -1.0, w1 = -1.0;
    analysis.number("window_start", w0);
    analysis.number("window_end", w1);
    if (w0 >= 0.0) run.analysis_window = Window{w0, w1 >= 0.0 ? w1 : duration};
    analysis.number("rel_envelope", run.tolerances.rel_envelope);
    analysis.number("abs_freq", run.tolerances.abs_freq);
    analysis.reject_unknown();

    if (auto violations = validate_sim_config(run.sim); !violations.empty())
        throw ConfigError(violations.front());
    return run;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    return build_run_config(parse_ini_file(path));
}

}  // namespace masseur
