#pragma once

#include <span>
#include <string>
#include <vector>

#include "gravsim/constants.hpp"
#include "gravsim/field.hpp"
#include "gravsim/oracle/wavefunction.hpp"

namespace gravsim::oracle {

// Transverse double-slit model, scaled units (hbar = 1). The forward flight
// is classical (distance L = v * time); the grid holds the transverse
// amplitude, initialized as two Gaussian windows of 1/e^2 half-width
// slit_width/2 separated by slit_separation, with a common forward phase.
struct DoubleSlitParams {
    double slit_separation = 1.0;   // d
    double slit_width = 0.04;       // w, Gaussian sigma = w/2
    double mass = 1.0;
    double v = 50.0;                // forward speed, sets L = v * time
    double time = 4.0;
    std::size_t n_grid = 65536;

    void validate() const;
    double de_broglie() const;              // 2 pi / (mass * v)
    double predicted_spacing() const;       // lambda_dB * L / d
};

struct DoubleSlitResult {
    std::vector<double> x;
    std::vector<double> intensity;
    double predicted_spacing;
    bool far_field;                          // L >= 10 d^2 / lambda
    std::vector<std::string> warnings;
};

// Free propagation of the two-slit amplitude for params.time; single_slit
// zeroes one window (negative control). Throws std::invalid_argument when
// the grid resolves an expected fringe with fewer than 8 points.
DoubleSlitResult double_slit_propagate(const DoubleSlitParams& params,
                                       bool single_slit = false);

// Median distance between sub-pixel-refined local maxima above half the
// profile maximum. Throws std::runtime_error with fewer than 3 such peaks.
double extract_fringe_spacing(std::span<const double> intensity,
                              std::span<const double> x);

// Gravitational phase between the two arms of a photon double slit:
// -(2 pi nu / c^2) g l t. SI units.
double photon_double_slit_phase(double nu, double l, double t,
                                const gravsim::UniformGravityField& field,
                                const gravsim::PhysicalConstants& k = {});

}  // namespace gravsim::oracle
