#pragma once

namespace masseur {

// Virtual dynamics of the adaptive admittance controller.
struct AdmittanceParams {
    double m = 1.0;      // virtual mass, kg
    double b = 150.0;    // virtual damping, N*s/m
    double sigma = 0.5;  // adaptation gain; 0 disables adaptation
    double T = 0.002;    // control period, s
};

// Controller state on the approach coordinate (positive = toward tissue).
struct AdmittanceState {
    double x_c = 0.0;         // commanded position, m
    double xd_c = 0.0;        // commanded velocity, m/s
    double xdd_c = 0.0;       // commanded acceleration, m/s^2
    double phi = 0.0;         // adaptive compensation, m/s
    double f_err_prev = 0.0;  // previous-cycle f_e - f_d, N
};

// Uncorrected reference trajectory a technique generator emits.
struct ReferenceKinematics {
    double x_e = 0.0;
    double xd_e = 0.0;
    double xdd_e = 0.0;
};

// phi(t) = phi(t-T) + sigma * (f_e(t-T) - f_d(t-T)) / b
double update_compensation(double phi_prev, double f_e_prev, double f_d_prev,
                           const AdmittanceParams& params);

// One control cycle of the discrete position-mode admittance law:
//   xdd_c = xdd_e + (1/m) * [(f_d - f_e) - b*(xd_c_prev - xd_e) - phi]
//   xd_c  = xd_c_prev + xdd_c * T
//   x_c   = x_c_prev  + xd_c  * T
// phi is refreshed from the previous cycle's force error first.
// Throws NonFiniteInput if any input is NaN/inf.
AdmittanceState step(const AdmittanceState& state, const ReferenceKinematics& ref, double f_d,
                     double f_e, const AdmittanceParams& params);

}  // namespace masseur
