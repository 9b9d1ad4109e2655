#pragma once

#include <array>
#include <string>
#include <vector>

#include "gravsim/constants.hpp"
#include "gravsim/field.hpp"
#include "gravsim/phase.hpp"
#include "gravsim/species.hpp"

namespace gravsim {

// Two-photon Raman pulse pair. The signed effective wavenumber kappa is
// authoritative; k1 and k2 are carried as metadata only, so the
// counter-propagating sign convention never enters the observables.
struct RamanPulsePair {
    double k1 = 0.0;       // rad/m, metadata
    double k2 = 0.0;       // rad/m, metadata
    double kappa;          // rad/m, signed two-photon wavenumber
    double nu_diff;        // Hz, laser frequency difference nu1 - nu2

    static RamanPulsePair resonant(double kappa, const AtomSpecies& species) {
        return RamanPulsePair{0.0, 0.0, kappa, species.nu0};
    }
    void validate() const {
        if (kappa == 0.0)
            throw std::domain_error("RamanPulsePair: kappa must be nonzero");
    }
    bool resonant_with(const AtomSpecies& species, double rel_tol = 1e-9) const {
        return std::abs(nu_diff - species.nu0) <= rel_tol * species.nu0;
    }
};

// The pi/2 - pi - pi/2 Mach-Zehnder sequence. Pulses are instantaneous;
// areas are nominal Rabi phases.
struct PulseSequence {
    double T;                                    // interrogation interval, s
    std::array<double, 3> pulse_times;           // {0, T, 2T}
    std::array<double, 3> pulse_areas;           // {pi/2, pi, pi/2}

    static PulseSequence mach_zehnder(double T);
    void validate() const;
};

struct InterferometerGeometry {
    Path arm_upper;        // the arm kicked over [0, T] (upper for kappa > 0)
    Path arm_lower;
    double separation_l;   // max spatial separation hbar kappa T / m_i, m
    AtomSpecies species;
};

struct GravimetrySetup {
    AtomSpecies species;
    UniformGravityField field;
    RamanPulsePair pulses;
    PulseSequence sequence;
    double initial_velocity = 0.0;  // m/s
    int n_seg = 1000;               // arm discretization for path phases

    void validate() const;
};

// Free-fall arm trajectories with instantaneous velocity kicks
// hbar*kappa/m_i at the pulse times, discretized into n_seg segments
// (midpoint heights). n_seg is rounded up to even so the mirror pulse lands
// on a segment boundary.
InterferometerGeometry build_geometry(const GravimetrySetup& setup,
                                      const PhysicalConstants& k = {});

// Continuous arm positions at time t in [0, 2T] (the parabolas the
// discretized geometry samples).
struct ArmSample {
    double upper;
    double lower;
};
ArmSample arm_positions(const GravimetrySetup& setup, double t,
                        const PhysicalConstants& k = {});

// The gravimeter phase -(m_g/m_i) g kappa T^2.
double gravimeter_phase(const GravimetrySetup& setup, const PhysicalConstants& k = {});

// Same phase via the two arms' potential-energy path phases.
double gravimeter_phase_from_paths(const GravimetrySetup& setup,
                                   const PhysicalConstants& k = {});

// -2 pi g T^2 / lambda_dB with lambda_dB = 2 pi / kappa: the phase as the
// ratio of free-fall distance to the de Broglie wavelength. Defined only
// under the exact equivalence principle; other mass ratios are rejected.
double phase_debroglie_form(const GravimetrySetup& setup, const PhysicalConstants& k = {});

// -omega_c g l T / c^2 with l = hbar kappa T / m_i. Numerically identical to
// gravimeter_phase at eta = 1: the Compton frequency enters only as a unit
// conversion.
double phase_compton_form(const GravimetrySetup& setup, const PhysicalConstants& k = {});

// Output port probabilities for a given interferometer phase:
// P_b = (1 - visibility cos(phase))/2, P_a = 1 - P_b.
struct Populations {
    double p_a;
    double p_b;
};
Populations output_populations(double phase, double visibility);

// The projected-to-real-space picture: fringes fall through 2 g T^2 over 2T,
// and the corresponding fringe phase matches the gravimeter phase magnitude.
struct FringeFall {
    double fall_distance;  // m
    double fringe_phase;   // rad
};
FringeFall fringe_fall_picture(const GravimetrySetup& setup);

// One-parameter sweep of the gravimeter observable (visibility 1).
struct FringePoint {
    double value;
    double phase;
    double p_a;
    double p_b;
};
std::vector<FringePoint> fringe_scan(const GravimetrySetup& setup,
                                     const std::string& parameter,
                                     const std::vector<double>& values,
                                     const PhysicalConstants& k = {});

}  // namespace gravsim
