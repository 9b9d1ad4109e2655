#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace gravsim::oracle {

// Uniform periodic spatial grid, power-of-two size. Scaled units throughout
// the oracle (hbar = 1).
struct Grid1D {
    std::size_t n;
    double x_min;
    double x_max;

    Grid1D(std::size_t n_points, double lo, double hi) : n(n_points), x_min(lo), x_max(hi) {
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid1D: n must be a power of two >= 2");
        if (!(x_max > x_min))
            throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    }

    double dx() const { return (x_max - x_min) / static_cast<double>(n); }
    double dk() const { return 2.0 * std::numbers::pi / (x_max - x_min); }
    double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }

    // FFT-ordered signed momentum of bin i.
    double k(std::size_t i) const {
        const auto half = n / 2;
        const double j = (i < half) ? static_cast<double>(i)
                                    : static_cast<double>(i) - static_cast<double>(n);
        return j * dk();
    }
    double k_max() const { return std::numbers::pi / dx(); }
};

}  // namespace gravsim::oracle
