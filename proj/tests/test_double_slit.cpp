#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gravsim/conversions.hpp"
#include "gravsim/oracle/double_slit.hpp"

using namespace gravsim::oracle;

TEST_CASE("fringe extraction on a synthetic cos^2 profile") {
    const double spacing = 3.7;
    std::vector<double> x, intensity;
    for (int i = 0; i < 4000; ++i) {
        const double xi = -20.0 + 0.01 * i;
        x.push_back(xi);
        const double c = std::cos(std::numbers::pi * xi / spacing);
        intensity.push_back(c * c);
    }
    const double measured = extract_fringe_spacing(intensity, x);
    CHECK(measured == doctest::Approx(spacing).epsilon(1e-3));

    // A constant background moves no maxima.
    auto lifted = intensity;
    for (auto& v : lifted) v += 5.0;
    CHECK(extract_fringe_spacing(lifted, x) == doctest::Approx(measured).epsilon(1e-6));

    // A featureless profile has no peaks to report.
    std::vector<double> flat(x.size(), 1.0);
    CHECK_THROWS_AS(extract_fringe_spacing(flat, x), std::runtime_error);
}

TEST_CASE("double-slit spacing matches the Fraunhofer prediction") {
    DoubleSlitParams p;  // defaults: d=1, w=0.04, m=1, v=50, t=4
    const auto r = double_slit_propagate(p);
    CHECK(r.far_field);
    CHECK(r.warnings.empty());
    const double measured = extract_fringe_spacing(r.intensity, r.x);
    CHECK(std::abs(measured - r.predicted_spacing) <= 0.01 * r.predicted_spacing);
}

TEST_CASE("doubling the mass halves the spacing") {
    DoubleSlitParams p;
    const auto r1 = double_slit_propagate(p);
    const double s1 = extract_fringe_spacing(r1.intensity, r1.x);
    DoubleSlitParams heavier = p;
    heavier.mass *= 2.0;
    const auto r2 = double_slit_propagate(heavier);
    const double s2 = extract_fringe_spacing(r2.intensity, r2.x);
    CHECK(std::abs(s2 - 0.5 * s1) <= 0.02 * 0.5 * s1);
}

TEST_CASE("single slit shows no comparable fringes") {
    DoubleSlitParams p;
    const auto both = double_slit_propagate(p);
    const auto one = double_slit_propagate(p, true);

    // Contrast within a central window of one fringe period.
    auto contrast = [&](const DoubleSlitResult& r) {
        double hi = 0.0, lo = 1e300;
        for (std::size_t i = 0; i < r.x.size(); ++i) {
            if (std::abs(r.x[i]) > both.predicted_spacing) continue;
            hi = std::max(hi, r.intensity[i]);
            lo = std::min(lo, r.intensity[i]);
        }
        return (hi - lo) / (hi + lo);
    };
    CHECK(contrast(one) < 0.05 * contrast(both));
}

TEST_CASE("far-field flag and configuration errors") {
    DoubleSlitParams p;
    p.time = 0.05;  // L = 2.5 << 10 d^2 / lambda
    const auto r = double_slit_propagate(p);
    CHECK_FALSE(r.far_field);
    CHECK(r.warnings.size() == 1);

    DoubleSlitParams coarse;
    coarse.n_grid = 256;  // cannot resolve the slit momentum content
    CHECK_THROWS_AS(double_slit_propagate(coarse), std::invalid_argument);

    DoubleSlitParams bad;
    bad.slit_width = 2.0;  // wider than the separation
    CHECK_THROWS_AS(double_slit_propagate(bad), std::domain_error);
}

TEST_CASE("photon double slit phase") {
    const gravsim::UniformGravityField f{9.8, 0.0};
    const double t = 10.0 / 299792458.0;
    const double phase = photon_double_slit_phase(5e14, 1.0, t, f);
    CHECK(phase == doctest::Approx(-1.1426516198e-8).epsilon(1e-9));
    CHECK(std::abs(std::abs(phase) - 1.14e-8) <= 1e-10);

    CHECK(photon_double_slit_phase(5e14, 0.0, t, f) == 0.0);
    CHECK_THROWS_AS(photon_double_slit_phase(0.0, 1.0, t, f), std::domain_error);
    CHECK_THROWS_AS(photon_double_slit_phase(5e14, 1.0, 0.0, f), std::domain_error);

    // Cs-atom phase over the same (l, t) exceeds the photon phase by mc^2/(h nu).
    const auto cs = gravsim::species_by_label("Cs-133");
    gravsim::PhysicalConstants k;
    const double atom_phase = -cs.m_gravitational * 9.8 * 1.0 * t / k.hbar;
    const double expected_ratio =
        gravsim::mass_to_photon_sensitivity_ratio(cs, 5e14, k);
    CHECK(atom_phase / phase == doctest::Approx(expected_ratio).epsilon(1e-12));
}
