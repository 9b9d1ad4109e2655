#pragma once

#include <numbers>
#include <stdexcept>

#include "gravsim/constants.hpp"
#include "gravsim/species.hpp"

namespace gravsim {

// omega_c = m c^2 / hbar, rad/s. A conversion of the unit of mass, not an
// observable oscillator.
inline double compton_angular_frequency(const AtomSpecies& species,
                                        const PhysicalConstants& k = {}) {
    return species.m_inertial * k.c * k.c / k.hbar;
}

// lambda_dB = 2 pi hbar / (m_i v) = h / (m_i v), metres.
inline double de_broglie_wavelength(const AtomSpecies& species, double v,
                                    const PhysicalConstants& k = {}) {
    if (!(v > 0.0))
        throw std::domain_error("de_broglie_wavelength: speed must be > 0");
    return 2.0 * std::numbers::pi * k.hbar / (species.m_inertial * v);
}

// The de Broglie wavelength written as the Compton wavelength h/(m c)
// stretched by the large factor cT/l, for a state separation l reached over
// drift time T (so v = l/T). Agrees with de_broglie_wavelength(species, l/T)
// identically.
inline double compton_form_of_debroglie(const AtomSpecies& species, double l,
                                        double T, const PhysicalConstants& k = {}) {
    if (!(l > 0.0) || !(T > 0.0))
        throw std::domain_error("compton_form_of_debroglie: l and T must be > 0");
    const double lambda_compton = k.h / (species.m_inertial * k.c);
    return lambda_compton * (k.c * T / l);
}

// m c^2 / (h nu): rest-mass energy over photon energy, the sensitivity
// advantage of a massive particle over a photon of frequency nu in a
// gravitationally shifted two-path geometry.
inline double mass_to_photon_sensitivity_ratio(const AtomSpecies& species,
                                               double photon_nu,
                                               const PhysicalConstants& k = {}) {
    if (!(photon_nu > 0.0))
        throw std::domain_error("mass_to_photon_sensitivity_ratio: photon_nu must be > 0");
    return species.m_inertial * k.c * k.c / (k.h * photon_nu);
}

}  // namespace gravsim
