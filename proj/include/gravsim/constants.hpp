#pragma once

#include <numbers>
#include <stdexcept>

namespace gravsim {

// Fundamental constants, SI units, CODATA 2018.
// h and c are exact by the 2019 SI definitions; hbar is derived so that
// h == 2*pi*hbar holds to rounding.
namespace codata2018 {
inline constexpr double speed_of_light = 299792458.0;            // m/s
inline constexpr double planck = 6.62607015e-34;                 // J s
inline constexpr double planck_reduced = planck / (2.0 * std::numbers::pi);
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg
}  // namespace codata2018

struct PhysicalConstants {
    double c = codata2018::speed_of_light;       // m/s
    double hbar = codata2018::planck_reduced;    // J s
    double h = codata2018::planck;               // J s

    void validate() const {
        if (!(c > 0.0) || !(hbar > 0.0) || !(h > 0.0))
            throw std::domain_error("PhysicalConstants: all constants must be positive");
        const double two_pi_hbar = 2.0 * std::numbers::pi * hbar;
        if (std::abs(h - two_pi_hbar) > 1e-15 * h)
            throw std::domain_error("PhysicalConstants: h != 2*pi*hbar");
    }
};

inline PhysicalConstants si_constants() { return PhysicalConstants{}; }

}  // namespace gravsim
