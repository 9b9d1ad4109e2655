#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gravsim/clock.hpp"
#include "gravsim/conversions.hpp"

using namespace gravsim;

namespace {
const UniformGravityField g98{9.8, 0.0};

OscillatorClock cs_clock(double x, double nu = 9.192631770e9) {
    return OscillatorClock{nu, x, species_by_label("Cs-133")};
}
}  // namespace

TEST_CASE("accumulated_dilation") {
    CHECK(accumulated_dilation(cs_clock(0.0), g98, 1.0) == 0.0);
    CHECK(accumulated_dilation(cs_clock(1.0), g98, 1.0) ==
          doctest::Approx(1.0903970549e-16).epsilon(1e-9));

    // Independent of the oscillator frequency.
    const double base = accumulated_dilation(cs_clock(2.5), g98, 0.7);
    for (double k : {0.5, 2.0, 10.0}) {
        const double scaled = accumulated_dilation(cs_clock(2.5, k * 9.192631770e9),
                                                   g98, 0.7);
        CHECK(std::abs(scaled - base) <= 1e-15 * std::abs(base));
    }

    CHECK_THROWS_AS(accumulated_dilation(cs_clock(1.0), g98, 0.0), std::domain_error);
    CHECK_THROWS_AS(accumulated_dilation(cs_clock(1.0), g98, -2.0), std::domain_error);
}

TEST_CASE("relative_dilation") {
    const ClockComparison same{cs_clock(1.0), cs_clock(1.0), 1.0};
    CHECK(relative_dilation(same, g98) == 0.0);

    const ClockComparison metre{cs_clock(1.0), cs_clock(0.0), 1.0};
    CHECK(relative_dilation(metre, g98) ==
          doctest::Approx(1.0903970549e-16).epsilon(1e-9));

    // Antisymmetry under clock exchange.
    const ClockComparison swapped{cs_clock(0.0), cs_clock(1.0), 1.0};
    CHECK(relative_dilation(swapped, g98) ==
          doctest::Approx(-relative_dilation(metre, g98)).epsilon(1e-15));

    // Linearity in T, g and l.
    const double base = relative_dilation(metre, g98);
    CHECK(relative_dilation({cs_clock(1.0), cs_clock(0.0), 3.0}, g98) ==
          doctest::Approx(3.0 * base).epsilon(1e-14));
    CHECK(relative_dilation(metre, {2.0 * 9.8, 0.0}) ==
          doctest::Approx(2.0 * base).epsilon(1e-14));
    CHECK(relative_dilation({cs_clock(2.0), cs_clock(0.0), 1.0}, g98) ==
          doctest::Approx(2.0 * base).epsilon(1e-14));

    // Gauge independence.
    CHECK(relative_dilation(metre, {9.8, 777.0}) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("relative_dilation_ep") {
    const ClockComparison metre{cs_clock(1.0), cs_clock(0.0), 1.0};
    CHECK(relative_dilation_ep(metre, g98) == relative_dilation(metre, g98));

    const AtomSpecies cs = species_by_label("Cs-133");
    auto clock_eta = [&](double eta, double x) {
        return OscillatorClock{cs.nu0, x, cs.with_ep_ratio(eta)};
    };

    const ClockComparison decoupled{clock_eta(0.0, 1.0), clock_eta(0.0, 0.0), 1.0};
    CHECK(relative_dilation_ep(decoupled, g98) == 0.0);

    const double eta = 1.0 + 1e-9;
    const ClockComparison tweaked{clock_eta(eta, 1.0), clock_eta(eta, 0.0), 1.0};
    CHECK(relative_dilation_ep(tweaked, g98) ==
          doctest::Approx(eta * relative_dilation(metre, g98)).epsilon(1e-14));

    const ClockComparison mismatched{clock_eta(1.0, 1.0), clock_eta(0.9, 0.0), 1.0};
    CHECK_THROWS_AS(relative_dilation_ep(mismatched, g98), std::domain_error);
}

TEST_CASE("resolvable_dilation") {
    CHECK(resolvable_dilation(1.0 / (2.0 * std::numbers::pi), 1.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(resolvable_dilation(2.0, 1e-3) ==
          doctest::Approx(0.5 * resolvable_dilation(1.0, 1e-3)).epsilon(1e-15));
    CHECK(resolvable_dilation(9.192631770e9, 1e-3) ==
          doctest::Approx(1.7313316477e-14).epsilon(1e-9));
    CHECK_THROWS_AS(resolvable_dilation(0.0, 1e-3), std::domain_error);
    CHECK_THROWS_AS(resolvable_dilation(1e9, 0.0), std::domain_error);
}

TEST_CASE("compton_time_resolution") {
    const AtomSpecies cs = species_by_label("Cs-133");
    const double omega_c = compton_angular_frequency(cs);

    CHECK(compton_time_resolution(cs, omega_c).seconds ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(compton_time_resolution(cs, 1.445e6).seconds ==
          doctest::Approx(7.6826455533e-21).epsilon(1e-9));
    CHECK(compton_time_resolution(cs, 1.0).note.find("unit conversion") !=
          std::string_view::npos);

    // For equal phase the genuine-oscillator resolution is mc^2/(h nu) times
    // coarser; for an optical transition that factor is > 1e10.
    const double nu_optical = 5e14;
    const double phase = 1.0;
    const double ratio = resolvable_dilation(nu_optical, phase) /
                         compton_time_resolution(cs, phase).seconds;
    CHECK(ratio == doctest::Approx(mass_to_photon_sensitivity_ratio(cs, nu_optical))
                       .epsilon(1e-12));
    CHECK(ratio > 1e10);
}
