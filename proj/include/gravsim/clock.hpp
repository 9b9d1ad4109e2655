#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

#include "gravsim/constants.hpp"
#include "gravsim/field.hpp"
#include "gravsim/species.hpp"

namespace gravsim {

// A stationary oscillator clock: a transition of frequency nu held at fixed
// height x. Transported clocks are out of scope by construction.
struct OscillatorClock {
    double nu;            // Hz
    double x;             // m
    AtomSpecies species;  // carrier of the transition

    void validate() const {
        if (!(nu > 0.0)) throw std::domain_error("OscillatorClock: nu must be > 0");
        species.validate();
    }
};

struct ClockComparison {
    OscillatorClock clock_a;
    OscillatorClock clock_b;
    double duration;  // s

    void validate() const {
        clock_a.validate();
        clock_b.validate();
        if (!(duration > 0.0))
            throw std::domain_error("ClockComparison: duration must be > 0");
    }
};

// Gravitational time gained by one clock over duration T relative to a clock
// at zero potential: phi_g(x) T / c^2. The oscillator frequency cancels
// between the accumulated phase (proportional to nu) and the phase-to-time
// division by 2 pi nu, so the result is independent of the clock's make.
inline double accumulated_dilation(const OscillatorClock& clock,
                                   const UniformGravityField& field, double T,
                                   const PhysicalConstants& k = {}) {
    clock.validate();
    if (!(T > 0.0)) throw std::domain_error("accumulated_dilation: T must be > 0");
    return potential_at(field, clock.x) * T / (k.c * k.c);
}

// Relative dilation of two stationary clocks: T g (x1 - x2) / c^2.
inline double relative_dilation(const ClockComparison& cmp,
                                const UniformGravityField& field,
                                const PhysicalConstants& k = {}) {
    cmp.validate();
    return cmp.duration *
           (potential_at(field, cmp.clock_a.x) - potential_at(field, cmp.clock_b.x)) /
           (k.c * k.c);
}

// Relative dilation without assuming the exact equivalence principle:
// (m_g/m_i) T g l / c^2. Both clocks must share the same mass ratio or the
// comparison is ill-posed.
inline double relative_dilation_ep(const ClockComparison& cmp,
                                   const UniformGravityField& field,
                                   const PhysicalConstants& k = {}) {
    cmp.validate();
    const double eta_a = cmp.clock_a.species.ep_ratio();
    const double eta_b = cmp.clock_b.species.ep_ratio();
    if (std::abs(eta_a - eta_b) > 1e-15 * std::max(1.0, std::abs(eta_a)))
        throw std::domain_error(
            "relative_dilation_ep: clocks carry different m_g/m_i ratios");
    return eta_a * relative_dilation(cmp, field, k);
}

// Smallest resolvable dilation for a phase readout of given resolution:
// delta_phi / (2 pi nu).
inline double resolvable_dilation(double nu, double phase_resolution) {
    if (!(nu > 0.0) || !(phase_resolution > 0.0))
        throw std::domain_error("resolvable_dilation: inputs must be > 0");
    return phase_resolution / (2.0 * std::numbers::pi * nu);
}

// The contested "Compton clock" conversion: phase / omega_c. The note records
// the standing of this number; it is a change of the unit of mass, not the
// reading of an independent physical clock.
struct ComptonTimeReading {
    double seconds;
    std::string_view note =
        "unit conversion of mass via omega_c; not an independent physical clock";
};

inline ComptonTimeReading compton_time_resolution(const AtomSpecies& species,
                                                  double phase,
                                                  const PhysicalConstants& k = {}) {
    species.validate();
    const double omega_c = species.m_inertial * k.c * k.c / k.hbar;
    return ComptonTimeReading{phase / omega_c};
}

}  // namespace gravsim
