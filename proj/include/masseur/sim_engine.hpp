#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "masseur/admittance.hpp"
#include "masseur/contact_model.hpp"
#include "masseur/core_types.hpp"
#include "masseur/techniques.hpp"

namespace masseur {

struct SimConfig {
    TechniqueSpec technique;
    AdmittanceParams admittance;
    SkinModel skin;
    std::uint64_t seed = 0;  // reserved for stochastic extensions; unused
};

struct SimResult {
    ForceTrace trace;
    std::optional<double> activation_time;            // vibrate only, s
    std::optional<double> steady_state_force_error;   // force-tracking modes, N
};

// All violated invariants, each message naming section.key.
std::vector<std::string> validate_sim_config(const SimConfig& cfg);

// Deterministic fixed-step closed loop at period admittance.T:
// technique generator -> admittance -> contact model -> one-tick-delayed
// force feedback. Throws ConfigError on invalid cfg, UnstableSimulation if
// any state goes non-finite or |fz| exceeds 1000 N.
SimResult run_simulation(const SimConfig& cfg);

// Bit-exact trace CSV; throws EmptyTrace / IoError.
void export_trace(const SimResult& result, const std::filesystem::path& path);

}  // namespace masseur
