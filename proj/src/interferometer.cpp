#include "gravsim/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "gravsim/conversions.hpp"
#include "gravsim/parallel.hpp"

namespace gravsim {

PulseSequence PulseSequence::mach_zehnder(double T) {
    if (!(T > 0.0))
        throw std::domain_error("PulseSequence: T must be > 0");
    constexpr double pi = std::numbers::pi;
    return PulseSequence{T, {0.0, T, 2.0 * T}, {pi / 2.0, pi, pi / 2.0}};
}

void PulseSequence::validate() const {
    constexpr double pi = std::numbers::pi;
    if (!(T > 0.0))
        throw std::domain_error("PulseSequence: T must be > 0");
    if (pulse_times != std::array<double, 3>{0.0, T, 2.0 * T} ||
        pulse_areas != std::array<double, 3>{pi / 2.0, pi, pi / 2.0})
        throw std::domain_error("PulseSequence: must be the pi/2 - pi - pi/2 sequence");
}

void GravimetrySetup::validate() const {
    species.validate();
    pulses.validate();
    sequence.validate();
    if (n_seg < 2)
        throw std::domain_error("GravimetrySetup: n_seg must be >= 2");
}

namespace {

// Classical arm trajectories. Both arms start at x = 0 with the launch
// velocity; the "upper" arm carries the photon recoil over [0, T], the lower
// one over [T, 2T]. Closure at 2T is exact in a uniform field.
struct ArmKinematics {
    double v_recoil;  // hbar kappa / m_i
    double accel;     // (m_g/m_i) g, downward

    double upper(double t, double T, double v0) const {
        const double tb = std::min(t, T);
        return (v0 + v_recoil) * tb + v0 * (t - tb) - 0.5 * accel * t * t;
    }
    double lower(double t, double T, double v0) const {
        const double ta = std::max(t - T, 0.0);
        return v0 * t + v_recoil * ta - 0.5 * accel * t * t;
    }
};

ArmKinematics kinematics(const GravimetrySetup& setup, const PhysicalConstants& k) {
    return ArmKinematics{k.hbar * setup.pulses.kappa / setup.species.m_inertial,
                         setup.species.ep_ratio() * setup.field.g};
}

}  // namespace

ArmSample arm_positions(const GravimetrySetup& setup, double t,
                        const PhysicalConstants& k) {
    setup.validate();
    const double T = setup.sequence.T;
    if (!(t >= 0.0) || t > 2.0 * T)
        throw std::domain_error("arm_positions: t must lie in [0, 2T]");
    const ArmKinematics kin = kinematics(setup, k);
    return ArmSample{kin.upper(t, T, setup.initial_velocity),
                     kin.lower(t, T, setup.initial_velocity)};
}

InterferometerGeometry build_geometry(const GravimetrySetup& setup,
                                      const PhysicalConstants& k) {
    setup.validate();
    const double T = setup.sequence.T;
    const ArmKinematics kin = kinematics(setup, k);

    // Even segment count puts the mirror pulse on a segment boundary, so the
    // midpoint sampling of each (piecewise-parabolic) arm is kink-free.
    const int n = setup.n_seg + (setup.n_seg % 2);
    const double dt = 2.0 * T / n;

    InterferometerGeometry geo;
    geo.species = setup.species;
    geo.separation_l = kin.v_recoil * T;
    geo.arm_upper.segments.reserve(n);
    geo.arm_lower.segments.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double tm = (i + 0.5) * dt;
        geo.arm_upper.segments.push_back(
            PathSegment{kin.upper(tm, T, setup.initial_velocity), dt, std::nullopt});
        geo.arm_lower.segments.push_back(
            PathSegment{kin.lower(tm, T, setup.initial_velocity), dt, std::nullopt});
    }
    return geo;
}

double gravimeter_phase(const GravimetrySetup& setup, const PhysicalConstants&) {
    setup.validate();
    const double T = setup.sequence.T;
    return -setup.species.ep_ratio() * setup.field.g * setup.pulses.kappa * T * T;
}

double gravimeter_phase_from_paths(const GravimetrySetup& setup,
                                   const PhysicalConstants& k) {
    const InterferometerGeometry geo = build_geometry(setup, k);
    return differential_phase(geo.arm_upper, geo.arm_lower, setup.species, setup.field, k);
}

namespace {
void require_exact_ep(const GravimetrySetup& setup, const char* op) {
    if (setup.species.ep_ratio() != 1.0)
        throw std::domain_error(std::string(op) +
                                ": stated only for m_g = m_i; use gravimeter_phase for "
                                "other mass ratios");
}
}  // namespace

double phase_debroglie_form(const GravimetrySetup& setup, const PhysicalConstants&) {
    setup.validate();
    require_exact_ep(setup, "phase_debroglie_form");
    const double T = setup.sequence.T;
    const double lambda_db = 2.0 * std::numbers::pi / setup.pulses.kappa;
    return -2.0 * std::numbers::pi * setup.field.g * T * T / lambda_db;
}

double phase_compton_form(const GravimetrySetup& setup, const PhysicalConstants& k) {
    setup.validate();
    require_exact_ep(setup, "phase_compton_form");
    const double T = setup.sequence.T;
    const double omega_c = compton_angular_frequency(setup.species, k);
    const double l = k.hbar * setup.pulses.kappa * T / setup.species.m_inertial;
    return -omega_c * setup.field.g * l * T / (k.c * k.c);
}

Populations output_populations(double phase, double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw std::domain_error("output_populations: visibility must be in [0, 1]");
    const double p_b = 0.5 * (1.0 - visibility * std::cos(phase));
    return Populations{1.0 - p_b, p_b};
}

FringeFall fringe_fall_picture(const GravimetrySetup& setup) {
    setup.validate();
    require_exact_ep(setup, "fringe_fall_picture");
    const double T = setup.sequence.T;
    const double fall = 2.0 * setup.field.g * T * T;
    // Fringe shift over the centre-of-mass fringe scale 4 pi / kappa, as a
    // phase: 2 pi * fall / (4 pi / kappa) = kappa g T^2 in magnitude, with
    // the gravimeter sign.
    const double fringe_phase =
        -2.0 * std::numbers::pi * fall / (4.0 * std::numbers::pi / setup.pulses.kappa);
    return FringeFall{fall, fringe_phase};
}

std::vector<FringePoint> fringe_scan(const GravimetrySetup& setup,
                                     const std::string& parameter,
                                     const std::vector<double>& values,
                                     const PhysicalConstants& k) {
    setup.validate();
    if (values.empty())
        throw std::invalid_argument("fringe_scan: values must be non-empty");
    if (parameter != "g" && parameter != "T" && parameter != "kappa" && parameter != "eta")
        throw std::invalid_argument("fringe_scan: unknown parameter '" + parameter +
                                    "' (expected g, T, kappa or eta)");

    std::vector<FringePoint> rows(values.size());
    parallel_for_ordered(values.size(), [&](std::size_t i) {
        GravimetrySetup s = setup;
        const double v = values[i];
        if (parameter == "g") {
            s.field.g = v;
        } else if (parameter == "T") {
            s.sequence = PulseSequence::mach_zehnder(v);
        } else if (parameter == "kappa") {
            s.pulses.kappa = v;
        } else {
            s.species = setup.species.with_ep_ratio(v);
        }
        const double phase = gravimeter_phase(s, k);
        const Populations pops = output_populations(phase, 1.0);
        rows[i] = FringePoint{v, phase, pops.p_a, pops.p_b};
    });
    return rows;
}

}  // namespace gravsim
