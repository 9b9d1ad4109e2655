#include "gravsim/oracle/double_slit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravsim/kernels/fft.hpp"

namespace gravsim::oracle {

void DoubleSlitParams::validate() const {
    if (!(slit_width > 0.0) || !(slit_separation > slit_width))
        throw std::domain_error("DoubleSlitParams: need slit_separation > slit_width > 0");
    if (!(mass > 0.0) || !(v > 0.0) || !(time > 0.0))
        throw std::domain_error("DoubleSlitParams: mass, v and time must be > 0");
    if (n_grid < 2 || (n_grid & (n_grid - 1)) != 0)
        throw std::domain_error("DoubleSlitParams: n_grid must be a power of two >= 2");
}

double DoubleSlitParams::de_broglie() const {
    return 2.0 * std::numbers::pi / (mass * v);
}

double DoubleSlitParams::predicted_spacing() const {
    return de_broglie() * (v * time) / slit_separation;
}

DoubleSlitResult double_slit_propagate(const DoubleSlitParams& p, bool single_slit) {
    p.validate();
    const double sigma_s = 0.5 * p.slit_width;
    // Screen-side envelope width; the domain must hold it with margin.
    const double tau = p.time / (2.0 * p.mass * sigma_s * sigma_s);
    const double sigma_screen = sigma_s * std::sqrt(1.0 + tau * tau);
    const double half_dom =
        std::max(4.5 * sigma_screen, p.slit_separation + 20.0 * sigma_s);
    Grid1D grid(p.n_grid, -half_dom, half_dom);

    const double spacing = p.predicted_spacing();
    if (spacing / grid.dx() < 8.0)
        throw std::invalid_argument(
            "double_slit_propagate: fewer than 8 grid points per expected fringe; "
            "increase n_grid");
    if (grid.k_max() < 8.0 / (2.0 * sigma_s))
        throw std::invalid_argument(
            "double_slit_propagate: momentum grid too coarse for the slit width; "
            "increase n_grid");

    Wavefunction1D psi{grid, std::vector<cplx>(grid.n), "slits"};
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double xr = grid.x(i) - 0.5 * p.slit_separation;
        const double xl = grid.x(i) + 0.5 * p.slit_separation;
        double amp = std::exp(-xr * xr / (4.0 * sigma_s * sigma_s));
        if (!single_slit) amp += std::exp(-xl * xl / (4.0 * sigma_s * sigma_s));
        psi.amplitudes[i] = amp;
    }
    kernels::scale_inplace(psi.amplitudes, 1.0 / std::sqrt(psi.norm_sq()));

    // Free flight is a single exact spectral step.
    kernels::Fft fft(grid.n);
    fft.forward(psi.amplitudes);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double k = grid.k(i);
        psi.amplitudes[i] *= std::polar(1.0, -0.5 * k * k * p.time / p.mass);
    }
    fft.inverse(psi.amplitudes);

    DoubleSlitResult r;
    r.predicted_spacing = spacing;
    const double flight = p.v * p.time;
    const double rayleigh = p.slit_separation * p.slit_separation / p.de_broglie();
    r.far_field = flight >= 10.0 * rayleigh;
    if (!r.far_field)
        r.warnings.push_back("not in the far field: flight distance < 10 d^2/lambda_dB");
    r.x.resize(grid.n);
    r.intensity.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        r.x[i] = grid.x(i);
        r.intensity[i] = std::norm(psi.amplitudes[i]);
    }
    return r;
}

double extract_fringe_spacing(std::span<const double> intensity,
                              std::span<const double> x) {
    if (intensity.size() != x.size() || intensity.size() < 3)
        throw std::invalid_argument("extract_fringe_spacing: bad profile");
    const double peak = *std::max_element(intensity.begin(), intensity.end());
    const double threshold = 0.5 * peak;

    std::vector<double> centers;
    for (std::size_t i = 1; i + 1 < intensity.size(); ++i) {
        const double a = intensity[i - 1], b = intensity[i], c = intensity[i + 1];
        if (b > a && b > c && b >= threshold) {
            // Parabolic sub-pixel refinement through the three points.
            const double denom = a - 2.0 * b + c;
            const double delta = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
            centers.push_back(x[i] + delta * (x[i + 1] - x[i]));
        }
    }
    if (centers.size() < 3)
        throw std::runtime_error(
            "extract_fringe_spacing: fewer than 3 maxima above half-max");

    std::vector<double> gaps(centers.size() - 1);
    for (std::size_t i = 0; i + 1 < centers.size(); ++i)
        gaps[i] = centers[i + 1] - centers[i];
    std::sort(gaps.begin(), gaps.end());
    const std::size_t mid = gaps.size() / 2;
    return gaps.size() % 2 == 1 ? gaps[mid] : 0.5 * (gaps[mid - 1] + gaps[mid]);
}

double photon_double_slit_phase(double nu, double l, double t,
                                const gravsim::UniformGravityField& field,
                                const gravsim::PhysicalConstants& k) {
    if (!(nu > 0.0) || !(t > 0.0))
        throw std::domain_error("photon_double_slit_phase: nu and t must be > 0");
    return -(2.0 * std::numbers::pi * nu / (k.c * k.c)) * field.g * l * t;
}

}  // namespace gravsim::oracle
