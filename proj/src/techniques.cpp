#include "masseur/techniques.hpp"

#include <cmath>

namespace masseur {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double min_jerk(double tau) {
    return tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau));
}

double min_jerk_vel(double tau) {
    return tau * tau * (30.0 + tau * (-60.0 + 30.0 * tau));
}

double min_jerk_acc(double tau) {
    return tau * (60.0 + tau * (-180.0 + 120.0 * tau));
}

TickCommand beat_arm_command(double t, const BeatParams& p, int arm) {
    const double d = p.stroke_duration;
    const double cycle = 2.0 * d;
    double u = std::fmod(t + (arm == 1 ? d : 0.0), cycle);
    if (u < 0.0) u += cycle;

    TickCommand cmd;
    cmd.mode = ControlMode::PositionDominant;
    cmd.f_d = 0.0;

    if (u < d) {
        // Movement 1: raised -> struck.
        const double tau = u / d;
        const double j = min_jerk(tau);
        cmd.ref.x_e = p.dz * j;
        cmd.ref.xd_e = p.dz * min_jerk_vel(tau) / d;
        cmd.ref.xdd_e = p.dz * min_jerk_acc(tau) / (d * d);
        cmd.lateral.x = p.dx * j;
        cmd.lateral.rx = p.rot_x_deg * j;
    } else {
        // Movement 2: inverse, with the return rotation corrected by
        // corr_amp*cos(corr_omega*t) + corr_delta against accumulated
        // positioning error.
        const double tau = (u - d) / d;
        const double j = min_jerk(tau);
        const double corr =
            p.corr_amp_deg * std::cos(p.corr_omega * t) + p.corr_delta_deg;
        cmd.ref.x_e = p.dz * (1.0 - j);
        cmd.ref.xd_e = -p.dz * min_jerk_vel(tau) / d;
        cmd.ref.xdd_e = -p.dz * min_jerk_acc(tau) / (d * d);
        cmd.lateral.x = p.dx * (1.0 - j);
        cmd.lateral.rx = p.rot_x_deg + (-corr - p.rot_x_deg) * j;
    }
    return cmd;
}

TickCommand beat_command(double t, const BeatParams& p) { return beat_arm_command(t, p, 0); }

double press_desired_force(double t, const PressParams& p) {
    const double f_mid = 0.5 * (p.f_max + p.f_min);
    const double f_amp = 0.5 * (p.f_max - p.f_min);
    const double ts = p.sine_period;
    const double cycle = ts + p.hold_peak + p.hold_trough;
    const double w = kTwoPi / ts;

    double u = std::fmod(t, cycle);
    if (u < 0.0) u += cycle;

    if (u < 0.25 * ts) return f_mid + f_amp * std::sin(w * u);                 // rise to peak
    if (u < 0.25 * ts + p.hold_peak) return p.f_max;                           // peak hold
    if (u < 0.75 * ts + p.hold_peak)
        return f_mid + f_amp * std::sin(w * (u - p.hold_peak));                // fall to trough
    if (u < 0.75 * ts + p.hold_peak + p.hold_trough) return p.f_min;           // trough hold
    return f_mid + f_amp * std::sin(w * (u - p.hold_peak - p.hold_trough));    // rise to mid
}

TickCommand press_command(double t, const PressParams& p) {
    TickCommand cmd;
    cmd.mode = ControlMode::ForceTracking;
    cmd.f_d = press_desired_force(t, p);
    return cmd;
}

TickCommand push_command(double t, const PushParams& p) {
    TickCommand cmd;
    cmd.mode = ControlMode::ForceTracking;
    cmd.f_d = p.f_push;
    cmd.lateral.y = p.y0 + p.amp * std::sin(p.omega * t);
    cmd.lateral.y_dot = p.amp * p.omega * std::cos(p.omega * t);
    return cmd;
}

std::pair<TickCommand, VibrateActivation> vibrate_command(double t, const VibrateParams& p,
                                                          double f_e_now,
                                                          VibrateActivation activation) {
    TickCommand cmd;
    cmd.mode = ControlMode::ForceTracking;
    cmd.f_d = p.f_activate;

    if (!activation.active && f_e_now >= p.f_activate) {
        activation.active = true;
        activation.t_activate = t;
    }
    if (activation.active) {
        const double phase = kTwoPi * p.vib_freq * (t - activation.t_activate);
        cmd.osc_offset = p.vib_amp * std::sin(phase);
        cmd.osc_offset_dot = p.vib_amp * kTwoPi * p.vib_freq * std::cos(phase);
    }
    return {cmd, activation};
}

double technique_cycle(const TechniqueSpec& spec) {
    return std::visit(
        [](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BeatParams>)
                return (p.n_arms == 2 ? 1.0 : 2.0) * p.stroke_duration;
            else if constexpr (std::is_same_v<P, PressParams>)
                return p.sine_period + p.hold_peak + p.hold_trough;
            else if constexpr (std::is_same_v<P, PushParams>)
                return kTwoPi / p.omega;
            else
                return 1.0 / p.vib_freq;
        },
        spec.params);
}

}  // namespace masseur
