#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "masseur/analysis.hpp"
#include "masseur/sim_engine.hpp"

namespace masseur {

// Sectioned `key = value` plain text, `#`/`;` comments.
using ConfigMap = std::map<std::string, std::map<std::string, std::string>>;

ConfigMap parse_ini(std::istream& in);
ConfigMap parse_ini_file(const std::filesystem::path& path);

// "section.key" addressing, used by parameter sweeps.
void set_config_value(ConfigMap& cfg, const std::string& dotted_key, const std::string& value);

struct RunConfig {
    SimConfig sim;
    std::optional<Window> analysis_window;
    Tolerances tolerances;
};

// Builds and validates a RunConfig; throws ConfigError naming section.key
// for unknown keys, bad values, and violated module invariants.
RunConfig build_run_config(const ConfigMap& cfg);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace masseur
