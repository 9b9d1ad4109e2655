#pragma once

#include <cmath>
#include <stdexcept>

namespace gravsim {

// Uniform gravitational field. x is height (positive up), so the potential
// phi_g(x) = origin_potential + g*x rises with height and
// phi_g(x1) - phi_g(x2) = g*l for l = x1 - x2.
struct UniformGravityField {
    double g = 9.8;                 // m/s^2, positive downward pull
    double origin_potential = 0.0;  // phi_g at x = 0, m^2/s^2
};

inline double potential_at(const UniformGravityField& field, double x) {
    if (!std::isfinite(x))
        throw std::domain_error("potential_at: height must be finite");
    return field.origin_potential + field.g * x;
}

}  // namespace gravsim
