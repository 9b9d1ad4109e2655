#include "gravsim/oracle/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravsim/kernels/fft.hpp"

namespace gravsim::oracle {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_pi(double x) { return std::remainder(x, kTwoPi); }

std::vector<cplx> phase_imprint(const Grid1D& grid, double kappa) {
    std::vector<cplx> f(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i)
        f[i] = std::polar(1.0, kappa * grid.x(i));
    return f;
}

std::size_t integral_steps(double duration, double dt, const char* op,
                           std::size_t min_steps = 1) {
    const double raw = duration / dt;
    const double rounded = std::round(raw);
    if (rounded < static_cast<double>(min_steps) ||
        std::abs(raw - rounded) > 1e-9 * std::max(1.0, rounded))
        throw std::domain_error(std::string(op) +
                                ": duration must be an integral number of dt steps");
    return static_cast<std::size_t>(rounded);
}
}  // namespace

void OracleParams::validate() const {
    if (!(m_i > 0.0)) throw std::domain_error("OracleParams: m_i must be > 0");
    if (!(m_g >= 0.0)) throw std::domain_error("OracleParams: m_g must be >= 0");
    if (!(dt > 0.0)) throw std::domain_error("OracleParams: dt must be > 0");
    if (!(T > 0.0)) throw std::domain_error("OracleParams: T must be > 0");
    if (!(sigma0 > 0.0)) throw std::domain_error("OracleParams: sigma0 must be > 0");
    if (n_grid < 2 || (n_grid & (n_grid - 1)) != 0)
        throw std::domain_error("OracleParams: n_grid must be a power of two >= 2");
    integral_steps(T, dt, "OracleParams");
}

Wavefunction1D gaussian_packet(const Grid1D& grid, double x0, double sigma0,
                               double mass, double v0, const std::string& label) {
    Wavefunction1D psi{grid, std::vector<cplx>(grid.n), label};
    const double norm = std::pow(2.0 * std::numbers::pi * sigma0 * sigma0, -0.25);
    const double p0 = mass * v0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double d = grid.x(i) - x0;
        psi.amplitudes[i] =
            std::polar(norm * std::exp(-d * d / (4.0 * sigma0 * sigma0)), p0 * d);
    }
    const double n2 = psi.norm_sq();
    kernels::scale_inplace(psi.amplitudes, 1.0 / std::sqrt(n2));
    return psi;
}

cplx overlap_integral(const Wavefunction1D& a, const Wavefunction1D& b) {
    if (a.grid.n != b.grid.n || a.grid.x_min != b.grid.x_min || a.grid.x_max != b.grid.x_max)
        throw std::invalid_argument("overlap_integral: wavefunctions live on different grids");
    return kernels::inner_sum(a.amplitudes, b.amplitudes) * a.grid.dx();
}

double mean_momentum(const Wavefunction1D& psi) {
    std::vector<cplx> spectrum = psi.amplitudes;
    kernels::Fft fft(psi.grid.n);
    fft.forward(spectrum);
    double w = 0.0, kw = 0.0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double p = std::norm(spectrum[i]);
        w += p;
        kw += psi.grid.k(i) * p;
    }
    return kw / w;
}

Grid1D make_oracle_grid(const OracleParams& p) {
    p.validate();
    // Classical arm extremes over [0, 2T] (both arms sampled densely; the
    // trajectories are piecewise parabolas, so this is ample).
    const double v_recoil = p.kappa / p.m_i;
    const double accel = p.eta() * p.g;
    double lo = p.x0, hi = p.x0;
    const int samples = 512;
    for (int i = 0; i <= samples; ++i) {
        const double t = 2.0 * p.T * i / samples;
        const double tb = std::min(t, p.T);
        const double ta = std::max(t - p.T, 0.0);
        const double x_up = p.x0 + (p.v0 + v_recoil) * tb + p.v0 * (t - tb) -
                            0.5 * accel * t * t;
        const double x_lo = p.x0 + p.v0 * t + v_recoil * ta - 0.5 * accel * t * t;
        lo = std::min({lo, x_up, x_lo});
        hi = std::max({hi, x_up, x_lo});
    }
    const double tau = 2.0 * p.T / (2.0 * p.m_i * p.sigma0 * p.sigma0);
    const double sigma_max = p.sigma0 * std::sqrt(1.0 + tau * tau);
    const double pad = 10.0 * sigma_max;
    Grid1D grid(p.n_grid, lo - pad, hi + pad);

    // Spectral headroom: occupied momenta plus eight sigma of packet width.
    const double p_max = std::abs(p.m_i * p.v0) + std::abs(p.kappa) +
                         std::abs(p.m_g * p.g) * 2.0 * p.T;
    const double margin = 8.0 / (2.0 * p.sigma0);
    if (grid.k_max() < p_max + margin)
        throw std::invalid_argument(
            "make_oracle_grid: n_grid too small for the momentum content "
            "(k_max < p_max + 4/sigma0); increase n_grid");
    return grid;
}

Wavefunction1D split_step_evolve(const Wavefunction1D& psi_in, const OracleParams& p,
                                 double duration) {
    p.validate();
    const std::size_t nsteps =
        integral_steps(duration, p.dt, "split_step_evolve", 0);
    if (nsteps == 0) return psi_in;  // zero-duration evolution is the identity
    const Grid1D& grid = psi_in.grid;

    // Time-independent factors, built once per call.
    std::vector<cplx> pot_half(grid.n), pot_full(grid.n), kin(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double v = p.m_g * p.g * grid.x(i);
        pot_half[i] = std::polar(1.0, -0.5 * v * p.dt);
        pot_full[i] = std::polar(1.0, -v * p.dt);
        const double k = grid.k(i);
        kin[i] = std::polar(1.0, -0.5 * k * k * p.dt / p.m_i);
    }

    Wavefunction1D psi = psi_in;
    const double norm_before = psi.norm_sq();

    auto check_boundary = [&](std::size_t step) {
        const auto st = psi.position_stats();
        if (st.mean - 5.0 * st.sigma <= grid.x_min || st.mean + 5.0 * st.sigma >= grid.x_max)
            throw std::runtime_error(
                "split_step_evolve: boundary contact at step " + std::to_string(step) +
                " of " + std::to_string(nsteps) + " (packet within 5 sigma of the edge)");
    };
    check_boundary(0);

    kernels::Fft fft(grid.n);
    // Merged Strang steps: P_half (K P_full)^{n-1} K P_half.
    kernels::cmul_inplace(psi.amplitudes, pot_half);
    for (std::size_t step = 1; step <= nsteps; ++step) {
        fft.forward(psi.amplitudes);
        kernels::cmul_inplace(psi.amplitudes, kin);
        fft.inverse(psi.amplitudes);
        kernels::cmul_inplace(psi.amplitudes, step == nsteps ? pot_half : pot_full);
        check_boundary(step);
    }

    const double norm_after = psi.norm_sq();
    if (std::abs(norm_after - norm_before) > 1e-10 * norm_before)
        throw std::runtime_error("split_step_evolve: norm drifted beyond 1e-10 relative");
    return psi;
}

BranchPair apply_half_pi_split(const Wavefunction1D& psi, double kappa) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    BranchPair out{psi, psi};
    out.a.branch_label = "a";
    out.b.branch_label = "b";
    kernels::scale_inplace(out.a.amplitudes, inv_sqrt2);
    const auto imprint = phase_imprint(psi.grid, kappa);
    kernels::cmul_inplace(out.b.amplitudes, imprint);
    kernels::scale_inplace(out.b.amplitudes, inv_sqrt2);
    return out;
}

BranchPair apply_pi_mirror(const BranchPair& branches, double kappa) {
    if (branches.a.grid.n != branches.b.grid.n)
        throw std::invalid_argument("apply_pi_mirror: branches on different grids");
    const auto kick = phase_imprint(branches.a.grid, kappa);
    const auto dekick = phase_imprint(branches.a.grid, -kappa);
    BranchPair out{branches.b, branches.a};
    out.a.branch_label = "a";
    out.b.branch_label = "b";
    kernels::cmul_inplace(out.a.amplitudes, dekick);
    kernels::cmul_inplace(out.b.amplitudes, kick);
    return out;
}

BranchPair apply_beamsplitter(const BranchPair& branches, double kappa, double area) {
    constexpr double pi = std::numbers::pi;
    if (std::abs(area - 0.5 * pi) < 1e-12) {
        if (!branches.b.amplitudes.empty())
            throw std::invalid_argument(
                "apply_beamsplitter: pi/2 splits a single occupied branch");
        return apply_half_pi_split(branches.a, kappa);
    }
    if (std::abs(area - pi) < 1e-12) return apply_pi_mirror(branches, kappa);
    throw std::invalid_argument("apply_beamsplitter: unsupported pulse area (pi/2 or pi)");
}

double analytic_interferometer_phase(const OracleParams& p) {
    return wrap_pi(-p.eta() * p.kappa * p.g * p.T * p.T);
}

InterferometerResult run_interferometer_numeric(const OracleParams& p) {
    p.validate();
    const Grid1D grid = make_oracle_grid(p);
    const Wavefunction1D psi0 = gaussian_packet(grid, p.x0, p.sigma0, p.m_i, p.v0, "in");

    BranchPair pair = apply_half_pi_split(psi0, p.kappa);
    pair.a = split_step_evolve(pair.a, p, p.T);
    pair.b = split_step_evolve(pair.b, p, p.T);
    pair = apply_pi_mirror(pair, p.kappa);
    pair.a = split_step_evolve(pair.a, p, p.T);
    pair.b = split_step_evolve(pair.b, p, p.T);

    // Momentum-aligned recombination. b_dk carries the final pi/2 imprint.
    const auto dekick = phase_imprint(grid, -p.kappa);
    Wavefunction1D b_dk = pair.b;
    kernels::cmul_inplace(b_dk.amplitudes, dekick);

    // phase = arg <e^{-i kappa x} psi_b | psi_a>
    const cplx overlap = kernels::inner_sum(b_dk.amplitudes, pair.a.amplitudes) * grid.dx();

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    std::vector<cplx> port_a(grid.n), port_b(grid.n);
    const auto kick = phase_imprint(grid, p.kappa);
    for (std::size_t i = 0; i < grid.n; ++i) {
        port_a[i] = (pair.a.amplitudes[i] + b_dk.amplitudes[i]) * inv_sqrt2;
        port_b[i] = (kick[i] * pair.a.amplitudes[i] - pair.b.amplitudes[i]) * inv_sqrt2;
    }

    InterferometerResult r;
    r.p_a = kernels::norm_sq_sum(port_a) * grid.dx();
    r.p_b = kernels::norm_sq_sum(port_b) * grid.dx();
    r.phase = std::arg(overlap);

    const double na = std::sqrt(pair.a.norm_sq());
    const double nb = std::sqrt(pair.b.norm_sq());
    r.diagnostics.overlap_magnitude = std::abs(overlap) / (na * nb);
    r.diagnostics.norm_drift = std::abs(r.p_a + r.p_b - 1.0);
    r.diagnostics.steps = 2 * integral_steps(p.T, p.dt, "run_interferometer_numeric");
    if (r.diagnostics.overlap_magnitude < 0.9)
        r.diagnostics.warnings.push_back(
            "imperfect closure: normalized branch overlap below 0.9");
    return r;
}

}  // namespace gravsim::oracle
