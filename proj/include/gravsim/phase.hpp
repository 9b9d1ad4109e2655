#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gravsim/constants.hpp"
#include "gravsim/field.hpp"
#include "gravsim/species.hpp"

namespace gravsim {

// One piece of a semiclassical path. The potential is treated as constant
// over the segment, evaluated at the representative height x; continuously
// varying paths are represented by refining segments. The speed v is needed
// only by the wavelength-based phase forms.
struct PathSegment {
    double x;                        // representative height, m
    double duration;                 // s
    std::optional<double> v;         // speed along the segment, m/s

    void validate() const {
        if (!(duration > 0.0))
            throw std::domain_error("PathSegment: duration must be > 0");
        if (v && !(*v > 0.0))
            throw std::domain_error("PathSegment: speed must be > 0 when present");
    }
};

struct Path {
    std::vector<PathSegment> segments;

    double total_duration() const {
        double t = 0.0;
        for (const auto& s : segments) t += s.duration;
        return t;
    }
    void validate() const {
        if (segments.empty())
            throw std::domain_error("Path: needs at least one segment");
        for (const auto& s : segments) s.validate();
    }
};

struct PhaseResult {
    double phase = 0.0;              // rad, unwrapped
    std::vector<double> breakdown;   // per-segment phase, rad
};

// Gravitational phase of one segment: -m_g * phi_g(x) * duration / hbar.
double segment_phase(const PathSegment& seg, const AtomSpecies& species,
                     const UniformGravityField& field,
                     const PhysicalConstants& k = {});

// Ordered sum of segment phases.
PhaseResult path_phase(const Path& path, const AtomSpecies& species,
                       const UniformGravityField& field,
                       const PhysicalConstants& k = {});

// The same segment phase in its three equivalent algebraic forms, written in
// terms of (energy x time), (de Broglie wavelength) and (energy ratio x
// wavelength count). All require the segment speed and agree with
// segment_phase to rounding.
double phase_form_energy(const PathSegment& seg, const AtomSpecies& species,
                         const UniformGravityField& field,
                         const PhysicalConstants& k = {});
double phase_form_wavelength(const PathSegment& seg, const AtomSpecies& species,
                             const UniformGravityField& field,
                             const PhysicalConstants& k = {});
double phase_form_ratio(const PathSegment& seg, const AtomSpecies& species,
                        const UniformGravityField& field,
                        const PhysicalConstants& k = {});

// path_phase(a) - path_phase(b). For equal total durations the result is
// independent of the potential gauge (origin_potential).
double differential_phase(const Path& path_a, const Path& path_b,
                          const AtomSpecies& species,
                          const UniformGravityField& field,
                          const PhysicalConstants& k = {});

// Reduced de Broglie wavelength of two packet speeds of the same species:
// 1/lambda = 1/lambda(v1) - 1/lambda(v2). Positive for v1 > v2.
double reduced_de_broglie_wavelength(const AtomSpecies& species, double v1,
                                     double v2, const PhysicalConstants& k = {});

// JSON form: {"segments": [{"x_m": n, "duration_s": n, "v_mps": n|null}]}
std::string path_to_json_text(const Path& path);
Path path_from_json_text(const std::string& text);

}  // namespace gravsim
