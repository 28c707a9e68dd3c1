#include "masseur/admittance.hpp"

#include <cmath>

#include "masseur/errors.hpp"

namespace masseur {

double update_compensation(double phi_prev, double f_e_prev, double f_d_prev,
                           const AdmittanceParams& params) {
    return phi_prev + params.sigma * (f_e_prev - f_d_prev) / params.b;
}

AdmittanceState step(const AdmittanceState& state, const ReferenceKinematics& ref, double f_d,
                     double f_e, const AdmittanceParams& params) {
    for (double v : {state.x_c, state.xd_c, state.xdd_c, state.phi, state.f_err_prev, ref.x_e,
                     ref.xd_e, ref.xdd_e, f_d, f_e})
        if (!std::isfinite(v)) throw NonFiniteInput("non-finite input to admittance step");

    AdmittanceState next;
    // f_err_prev already stores f_e - f_d of the previous cycle.
    next.phi = update_compensation(state.phi, state.f_err_prev, 0.0, params);

    const double delta_f = f_d - f_e;
    next.xdd_c =
        ref.xdd_e + (delta_f - params.b * (state.xd_c - ref.xd_e) - next.phi) / params.m;
    next.xd_c = state.xd_c + next.xdd_c * params.T;
    next.x_c = state.x_c + next.xd_c * params.T;
    next.f_err_prev = f_e - f_d;
    return next;
}

}  // namespace masseur
