#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gravsim/kernels/kernels.hpp"
#include "gravsim/oracle/grid.hpp"

namespace gravsim::oracle {

using kernels::cplx;

struct Wavefunction1D {
    Grid1D grid;
    std::vector<cplx> amplitudes;
    std::string branch_label;

    // integral |psi|^2 dx
    double norm_sq() const {
        return kernels::norm_sq_sum(amplitudes) * grid.dx();
    }

    struct PositionStats {
        double mass;      // integral |psi|^2 dx
        double mean;      // <x>
        double sigma;     // sqrt(<x^2> - <x>^2)
    };
    PositionStats position_stats() const {
        const auto m = kernels::moments(amplitudes, grid.x_min, grid.dx());
        const double mass = m.w_sum * grid.dx();
        const double mean = m.xw_sum / m.w_sum;
        const double var = m.x2w_sum / m.w_sum - mean * mean;
        return PositionStats{mass, mean, var > 0.0 ? std::sqrt(var) : 0.0};
    }
};

// Normalized Gaussian packet centred at x0 with width sigma0 and velocity v0
// (momentum m*v0, hbar = 1).
Wavefunction1D gaussian_packet(const Grid1D& grid, double x0, double sigma0,
                               double mass, double v0,
                               const std::string& label = "");

// integral conj(a) b dx
cplx overlap_integral(const Wavefunction1D& a, const Wavefunction1D& b);

// Mean momentum <k> from the spectral first moment.
double mean_momentum(const Wavefunction1D& psi);

}  // namespace gravsim::oracle
