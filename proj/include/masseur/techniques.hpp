#pragma once

#include <numbers>
#include <utility>
#include <variant>

#include "masseur/admittance.hpp"

namespace masseur {

enum class ControlMode {
    ForceTracking,     // approach driven by the admittance loop
    PositionDominant,  // approach driven by the generator directly (beat strikes)
};

struct BeatParams {
    double rot_x_deg = 25.0;      // X rotation per strike, degrees
    double dx = 0.03;             // X translation per strike, m
    double dz = 0.16;             // approach stroke, m
    double stroke_duration = 1.0; // one movement, s
    double corr_amp_deg = 1.0;    // return-stroke rotation correction amplitude
    double corr_omega = 2.0 * std::numbers::pi / 60.0;  // rad/s
    double corr_delta_deg = 0.0;  // constant correction offset
    int n_arms = 2;               // alternating effectors, 1 or 2
};

struct PressParams {
    double f_max = 43.2;       // peak desired force, N
    double f_min = 8.5;        // trough desired force, N
    double hold_peak = 3.0;    // s
    double hold_trough = 1.0;  // s
    double sine_period = 1.26; // s; cycle = sine_period + holds
};

struct PushParams {
    double y0 = 0.0;           // stroke center, m
    double z0 = 0.0;
    double amp = 0.10;         // y amplitude, m (20 cm peak-to-peak)
    double omega = 2.0 * std::numbers::pi * 0.44;  // rad/s
    double f_push = 29.0;      // desired normal force, N
};

struct VibrateParams {
    double f_activate = 20.0;  // contact-force threshold, N
    double vib_freq = 7.33;    // Hz
    double vib_amp = 0.001;    // m, calibrated against the default SkinModel
};

struct TechniqueSpec {
    std::variant<BeatParams, PressParams, PushParams, VibrateParams> params;
    double duration = 0.0;  // total simulated time, s
};

// Technique-driven motion not under force control.
struct LateralOffsets {
    double x = 0.0;      // m
    double y = 0.0;      // m
    double rx = 0.0;     // degrees
    double y_dot = 0.0;  // m/s, analytic derivative of y
};

// Per-tick boundary between a technique generator and the admittance loop.
struct TickCommand {
    ReferenceKinematics ref;  // approach-coordinate reference
    LateralOffsets lateral;
    double f_d = 0.0;  // desired normal force, N
    ControlMode mode = ControlMode::ForceTracking;
    double osc_offset = 0.0;      // approach offset superimposed on the admittance depth, m
    double osc_offset_dot = 0.0;  // m/s
};

// Quintic minimum-jerk blend 10*tau^3 - 15*tau^4 + 6*tau^5 and derivatives.
double min_jerk(double tau);
double min_jerk_vel(double tau);
double min_jerk_acc(double tau);

// Strike/return cycle of one effector; arm 1 runs stroke_duration out of phase.
TickCommand beat_arm_command(double t, const BeatParams& p, int arm);
TickCommand beat_command(double t, const BeatParams& p);

// Piecewise sine with holds: quarter-sine rise, peak hold, half-sine fall,
// trough hold, quarter-sine rise back to mid. Continuous, spans [f_min, f_max].
double press_desired_force(double t, const PressParams& p);
TickCommand press_command(double t, const PressParams& p);

TickCommand push_command(double t, const PushParams& p);

struct VibrateActivation {
    bool active = false;
    double t_activate = 0.0;
};

std::pair<TickCommand, VibrateActivation> vibrate_command(double t, const VibrateParams& p,
                                                          double f_e_now,
                                                          VibrateActivation activation);

// One technique period, used for warm-up exclusion and steady-state windows.
double technique_cycle(const TechniqueSpec& spec);

}  // namespace masseur
