#include "masseur/sim_engine.hpp"

#include <cmath>
#include <variant>

#include "masseur/errors.hpp"
#include "masseur/trace_io.hpp"

namespace masseur {

namespace {

void check_positive(std::vector<std::string>& out, double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) out.push_back(std::string(what) + " > 0 violated");
}

}  // namespace

std::vector<std::string> validate_sim_config(const SimConfig& cfg) {
    std::vector<std::string> v;
    check_positive(v, cfg.admittance.m, "admittance.m");
    check_positive(v, cfg.admittance.b, "admittance.b");
    check_positive(v, cfg.admittance.T, "admittance.period_s");
    if (!(cfg.admittance.sigma >= 0.0)) v.push_back("admittance.sigma >= 0 violated");
    check_positive(v, cfg.skin.k, "skin.k");
    if (!(cfg.skin.c >= 0.0)) v.push_back("skin.c >= 0 violated");
    if (!(cfg.skin.n >= 1.0 && cfg.skin.n <= 3.0)) v.push_back("skin.n in [1, 3] violated");

    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BeatParams>) {
                check_positive(v, p.stroke_duration, "beat.stroke_duration");
                check_positive(v, p.dz, "beat.dz");
                if (p.n_arms != 1 && p.n_arms != 2) v.push_back("beat.n_arms in {1, 2} violated");
            } else if constexpr (std::is_same_v<P, PressParams>) {
                if (!(p.f_min >= 0.0)) v.push_back("press.f_min >= 0 violated");
                if (!(p.f_max > p.f_min)) v.push_back("press.f_max > press.f_min violated");
                check_positive(v, p.sine_period, "press.sine_period");
                if (!(p.hold_peak >= 0.0)) v.push_back("press.hold_peak >= 0 violated");
                if (!(p.hold_trough >= 0.0)) v.push_back("press.hold_trough >= 0 violated");
            } else if constexpr (std::is_same_v<P, PushParams>) {
                check_positive(v, p.amp, "push.amp");
                check_positive(v, p.omega, "push.omega");
                check_positive(v, p.f_push, "push.f_push");
            } else {
                check_positive(v, p.f_activate, "vibrate.f_activate");
                check_positive(v, p.vib_freq, "vibrate.vib_freq");
                check_positive(v, p.vib_amp, "vibrate.vib_amp");
            }
        },
        cfg.technique.params);

    check_positive(v, cfg.technique.duration, "sim.duration_s");
    if (v.empty() && cfg.technique.duration < 2.0 * technique_cycle(cfg.technique))
        v.push_back("sim.duration_s must cover at least 2 technique cycles");
    return v;
}

SimResult run_simulation(const SimConfig& cfg) {
    if (auto violations = validate_sim_config(cfg); !violations.empty())
        throw ConfigError(violations.front());

    const double T = cfg.admittance.T;
    const auto ticks = static_cast<std::uint64_t>(std::llround(cfg.technique.duration / T));
    const bool is_beat = std::holds_alternative<BeatParams>(cfg.technique.params);

    SimResult result;
    result.trace.sample_rate = 1.0 / T;
    result.trace.samples.reserve(ticks);
    result.trace.poses.reserve(ticks);

    AdmittanceState state;
    VibrateActivation activation;
    double f_e_prev = 0.0;
    std::vector<double> desired;
    desired.reserve(ticks);

    for (std::uint64_t i = 0; i < ticks; ++i) {
        const double t = static_cast<double>(i) * T;

        TickCommand cmd;
        double fz = 0.0;
        double approach = 0.0;

        if (is_beat) {
            const auto& p = std::get<BeatParams>(cfg.technique.params);
            cmd = beat_arm_command(t, p, 0);
            // Measured force is the sum over effectors in contact.
            for (int arm = 0; arm < p.n_arms; ++arm) {
                const TickCommand c = beat_arm_command(t, p, arm);
                fz += contact_force(cfg.skin, c.ref.x_e - cfg.skin.z_surface, c.ref.xd_e);
            }
            approach = cmd.ref.x_e;
        } else {
            std::visit(
                [&](const auto& p) {
                    using P = std::decay_t<decltype(p)>;
                    if constexpr (std::is_same_v<P, PressParams>)
                        cmd = press_command(t, p);
                    else if constexpr (std::is_same_v<P, PushParams>)
                        cmd = push_command(t, p);
                    else if constexpr (std::is_same_v<P, VibrateParams>) {
                        const bool was_active = activation.active;
                        std::tie(cmd, activation) = vibrate_command(t, p, f_e_prev, activation);
                        if (!was_active && activation.active) result.activation_time = t;
                    }
                },
                cfg.technique.params);

            state = step(state, cmd.ref, cmd.f_d, f_e_prev, cfg.admittance);
            approach = state.x_c + cmd.osc_offset;
            const double approach_vel = state.xd_c + cmd.osc_offset_dot;
            fz = contact_force(cfg.skin, approach - cfg.skin.z_surface, approach_vel);
        }

        if (!std::isfinite(fz) || std::abs(fz) > 1000.0)
            throw UnstableSimulation(i, "simulation unstable at tick " + std::to_string(i) +
                                            " (t = " + std::to_string(t) + " s)");

        result.trace.samples.push_back({t, fz, 0.0});
        result.trace.poses.push_back(
            {cmd.lateral.x, cmd.lateral.y, -approach, cmd.lateral.rx, 0.0, 0.0});
        desired.push_back(cmd.f_d);
        f_e_prev = fz;
    }

    if (!is_beat) {
        const double cycle = technique_cycle(cfg.technique);
        const double t0 = cfg.technique.duration - cycle;
        double sum = 0.0;
        std::uint64_t n = 0;
        for (std::uint64_t i = 0; i < ticks; ++i) {
            if (result.trace.samples[i].t < t0) continue;
            sum += std::abs(result.trace.samples[i].fz - desired[i]);
            ++n;
        }
        if (n > 0) result.steady_state_force_error = sum / static_cast<double>(n);
    }
    return result;
}

void export_trace(const SimResult& result, const std::filesystem::path& path) {
    write_trace_csv(result.trace, path);
}

}  // namespace masseur
