#include "masseur/contact_model.hpp"

#include <algorithm>
#include <cmath>

namespace masseur {

double contact_force(const SkinModel& model, double s, double s_dot) {
    if (s <= 0.0) return 0.0;
    const double spring = model.k * std::pow(s, model.n);
    return std::max(0.0, spring + model.c * s_dot);
}

}  // namespace masseur
