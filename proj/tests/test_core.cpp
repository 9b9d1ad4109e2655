#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gravsim/constants.hpp"
#include "gravsim/conversions.hpp"
#include "gravsim/field.hpp"
#include "gravsim/species.hpp"

using namespace gravsim;

TEST_CASE("constants invariants") {
    PhysicalConstants k;
    CHECK_NOTHROW(k.validate());
    CHECK(k.h == doctest::Approx(2.0 * std::numbers::pi * k.hbar).epsilon(1e-15));
    CHECK(k.c > 0.0);
    CHECK(k.hbar > 0.0);

    PhysicalConstants broken = k;
    broken.h = 6.6e-34;
    CHECK_THROWS_AS(broken.validate(), std::domain_error);
    broken = k;
    broken.c = -1.0;
    CHECK_THROWS_AS(broken.validate(), std::domain_error);
}

TEST_CASE("potential_at") {
    CHECK(potential_at({9.8, 0.0}, 0.0) == 0.0);
    CHECK(potential_at({9.8, 0.0}, 1.0) == doctest::Approx(9.8).epsilon(1e-15));
    CHECK(potential_at({9.8, 5.0}, 2.0) == doctest::Approx(24.6).epsilon(1e-15));
    CHECK_THROWS_AS(potential_at({9.8, 0.0}, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(potential_at({9.8, 0.0}, INFINITY), std::domain_error);

    // Linearity: phi(x1) - phi(x2) = g (x1 - x2) regardless of the gauge.
    const UniformGravityField f{3.7, 123.0};
    CHECK(potential_at(f, 2.5) - potential_at(f, 1.0) ==
          doctest::Approx(3.7 * 1.5).epsilon(1e-14));
}

TEST_CASE("species registry and invariants") {
    const AtomSpecies cs = cesium133();
    CHECK(cs.label == "Cs-133");
    CHECK(cs.m_inertial == doctest::Approx(2.20694650e-25).epsilon(1e-12));
    CHECK(cs.nu0 == 9192631770.0);
    CHECK(cs.ep_ratio() == 1.0);  // exact when m_g constructed equal to m_i

    const AtomSpecies rb = rubidium87();
    CHECK(rb.m_inertial == doctest::Approx(1.4431608952e-25).epsilon(1e-9));
    CHECK(rb.nu0 == doctest::Approx(6.834682610904e9).epsilon(1e-12));

    CHECK(cs.with_ep_ratio(0.5).ep_ratio() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(species_by_label("Unobtainium"), std::domain_error);

    AtomSpecies bad = cs;
    bad.m_inertial = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = cs;
    bad.nu0 = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("species from JSON") {
    const auto s = species_from_json_text(
        R"({"label":"X","m_inertial_kg":1e-25,"nu0_hz":5e9})");
    CHECK(s.m_gravitational == 1e-25);  // defaults to the inertial mass
    const auto t = species_from_json_text(
        R"({"label":"X","m_inertial_kg":1e-25,"m_gravitational_kg":5e-26,"nu0_hz":5e9})");
    CHECK(t.ep_ratio() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(species_from_json_text(R"({"label":"X"})"), std::domain_error);
    CHECK_THROWS_AS(
        species_from_json_text(R"({"label":"X","m_inertial_kg":-1,"nu0_hz":5e9})"),
        std::domain_error);
}

TEST_CASE("compton angular frequency") {
    PhysicalConstants k;
    // Unit-mass choice m = hbar/c^2 gives omega_c = 1.
    AtomSpecies unit{"unit", k.hbar / (k.c * k.c), k.hbar / (k.c * k.c), 1.0};
    CHECK(compton_angular_frequency(unit) == doctest::Approx(1.0).epsilon(1e-14));

    const AtomSpecies cs = cesium133();
    CHECK(compton_angular_frequency(cs) ==
          doctest::Approx(1.8808625101e26).epsilon(1e-9));

    AtomSpecies doubled = cs;
    doubled.m_inertial *= 2.0;
    CHECK(compton_angular_frequency(doubled) ==
          doctest::Approx(2.0 * compton_angular_frequency(cs)).epsilon(1e-15));
}

TEST_CASE("de Broglie wavelength") {
    const AtomSpecies cs = cesium133();
    // Cs two-photon recoil speed: lambda = 2 pi / kappa scale.
    CHECK(de_broglie_wavelength(cs, 7.047e-3) ==
          doctest::Approx(4.2604939473e-7).epsilon(1e-9));
    CHECK(de_broglie_wavelength(cs, 2.0 * 7.047e-3) ==
          doctest::Approx(0.5 * 4.2604939473e-7).epsilon(1e-12));
    CHECK_THROWS_AS(de_broglie_wavelength(cs, 0.0), std::domain_error);
    CHECK_THROWS_AS(de_broglie_wavelength(cs, -1.0), std::domain_error);

    // lambda = h/(m v) identity with m numerically equal to h, v = 1.
    PhysicalConstants k;
    AtomSpecies m_h{"m=h", k.h, k.h, 1.0};
    CHECK(de_broglie_wavelength(m_h, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Compton form of the de Broglie wavelength") {
    const AtomSpecies cs = cesium133();
    CHECK(compton_form_of_debroglie(cs, 7.047e-4, 0.1) ==
          doctest::Approx(4.2604939473e-7).epsilon(1e-9));
    PhysicalConstants k;
    CHECK(k.c * 0.1 / 7.047e-4 == doctest::Approx(4.2541855825e10).epsilon(1e-9));
    CHECK_THROWS_AS(compton_form_of_debroglie(cs, 0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(compton_form_of_debroglie(cs, 1.0, -0.1), std::domain_error);

    // Identity with de_broglie_wavelength at v = l/T on randomized inputs.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mass(1e-27, 1e-24), len(1e-6, 1.0),
        time(1e-3, 10.0);
    for (int i = 0; i < 1000; ++i) {
        AtomSpecies s{"r", mass(rng), mass(rng), 1.0};
        const double l = len(rng), T = time(rng);
        const double a = compton_form_of_debroglie(s, l, T);
        const double b = de_broglie_wavelength(s, l / T);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }

    // Depends only on v = l/T.
    const double base = compton_form_of_debroglie(cs, 7.047e-4, 0.1);
    const double scaled = compton_form_of_debroglie(cs, 7.047e-3, 1.0);
    CHECK(scaled == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("mass-to-photon sensitivity ratio") {
    const AtomSpecies cs = cesium133();
    const double ratio = mass_to_photon_sensitivity_ratio(cs, 5e14);
    CHECK(ratio == doctest::Approx(5.9869713153e10).epsilon(1e-9));
    CHECK(ratio >= 1e9);
    CHECK(ratio <= 1e11);

    PhysicalConstants k;
    const double nu_rest = cs.m_inertial * k.c * k.c / k.h;
    CHECK(mass_to_photon_sensitivity_ratio(cs, nu_rest) ==
          doctest::Approx(1.0).epsilon(1e-14));

    AtomSpecies doubled = cs;
    doubled.m_inertial *= 2.0;
    CHECK(mass_to_photon_sensitivity_ratio(doubled, 5e14) ==
          doctest::Approx(2.0 * ratio).epsilon(1e-15));
    CHECK_THROWS_AS(mass_to_photon_sensitivity_ratio(cs, 0.0), std::domain_error);
}
