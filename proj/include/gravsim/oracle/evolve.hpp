#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gravsim/oracle/wavefunction.hpp"

namespace gravsim::oracle {

// Scaled-unit evolution parameters (hbar = 1). The Hamiltonian is
// H = p^2 / (2 m_i) + m_g g x: kinetic term with the inertial mass,
// potential with the gravitational mass.
struct OracleParams {
    double m_i = 1.0;
    double m_g = 1.0;
    double g = 0.5;
    double kappa = 10.0;
    double T = 1.0;
    double dt = 5.0e-4;
    std::size_t n_grid = 4096;
    double sigma0 = 0.5;
    double x0 = 0.0;
    double v0 = 0.0;

    double eta() const { return m_g / m_i; }
    void validate() const;
};

// Grid sized so both arm trajectories stay well away from the boundary and
// the momentum grid covers the occupied spectrum with margin. Throws
// std::invalid_argument when n_grid cannot satisfy the spectral headroom.
Grid1D make_oracle_grid(const OracleParams& params);

// Second-order symmetric split-step propagation for `duration` (must be an
// integral number of dt steps). The packet is required to stay >= 5 sigma
// from both boundaries; violation raises std::runtime_error naming the step.
Wavefunction1D split_step_evolve(const Wavefunction1D& psi, const OracleParams& params,
                                 double duration);

struct BranchPair {
    Wavefunction1D a;  // unkicked port of the first splitter
    Wavefunction1D b;  // kicked port (momentum +kappa)
};

// pi/2 splitter on a single branch: (psi/sqrt2, e^{i kappa x} psi/sqrt2).
BranchPair apply_half_pi_split(const Wavefunction1D& psi, double kappa);

// pi mirror: (a, b) -> (e^{-i kappa x} b, e^{+i kappa x} a).
BranchPair apply_pi_mirror(const BranchPair& branches, double kappa);

// Convenience wrapper matching the two pulse areas above.
// area must be pi/2 (acts on pair.a, pair.b must be empty) or pi.
BranchPair apply_beamsplitter(const BranchPair& branches, double kappa, double area);

struct InterferometerDiagnostics {
    double overlap_magnitude;   // |<a|b>| / (|a||b|), 1 for perfect closure
    double norm_drift;          // | total norm - 1 |
    std::size_t steps;          // split steps executed per branch
    std::vector<std::string> warnings;
};

struct InterferometerResult {
    double phase;     // rad, in (-pi, pi]
    double p_a;
    double p_b;
    InterferometerDiagnostics diagnostics;
};

// Full pi/2 - evolve T - pi - evolve T - pi/2 sequence; the phase is the
// argument of the momentum-aligned branch overlap
// integral psi_a conj(psi_b) e^{i kappa x} dx, which equals
// -(m_g/m_i) kappa g T^2 modulo 2 pi.
InterferometerResult run_interferometer_numeric(const OracleParams& params);

// -(m_g/m_i) kappa g T^2 wrapped to (-pi, pi]: the analytic value the
// numeric run is compared against.
double analytic_interferometer_phase(const OracleParams& params);

}  // namespace gravsim::oracle
