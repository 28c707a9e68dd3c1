#pragma once

namespace masseur {

// Stand-in environment for the nonlinear stiffness of soft tissue:
// power-law spring plus linear damper, clamped to non-adhesive force.
struct SkinModel {
    double k = 100000.0;    // stiffness, N/m^n
    double n = 1.5;         // stiffness exponent, in [1, 3]
    double c = 50.0;        // damping, N*s/m
    double z_surface = 0.0; // undeformed surface position on the approach axis, m
};

// Normal contact force for tip penetration s (m, > 0 inside tissue) and
// penetration rate s_dot (m/s). Zero out of contact; never negative.
double contact_force(const SkinModel& model, double s, double s_dot);

}  // namespace masseur
