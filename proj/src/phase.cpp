#include "gravsim/phase.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "gravsim/conversions.hpp"

namespace gravsim {

double segment_phase(const PathSegment& seg, const AtomSpecies& species,
                     const UniformGravityField& field, const PhysicalConstants& k) {
    seg.validate();
    return -species.m_gravitational * potential_at(field, seg.x) * seg.duration / k.hbar;
}

PhaseResult path_phase(const Path& path, const AtomSpecies& species,
                       const UniformGravityField& field, const PhysicalConstants& k) {
    path.validate();
    PhaseResult r;
    r.breakdown.reserve(path.segments.size());
    for (const auto& seg : path.segments) {
        const double p = segment_phase(seg, species, field, k);
        r.breakdown.push_back(p);
        r.phase += p;
    }
    return r;
}

namespace {
double require_speed(const PathSegment& seg, const char* op) {
    seg.validate();
    if (!seg.v)
        throw std::domain_error(std::string(op) + ": segment speed v is required");
    return *seg.v;
}
}  // namespace

double phase_form_energy(const PathSegment& seg, const AtomSpecies& species,
                         const UniformGravityField& field, const PhysicalConstants& k) {
    const double v = require_speed(seg, "phase_form_energy");
    const double l = v * seg.duration;
    return -species.m_gravitational * potential_at(field, seg.x) * l / (v * k.hbar);
}

double phase_form_wavelength(const PathSegment& seg, const AtomSpecies& species,
                             const UniformGravityField& field, const PhysicalConstants& k) {
    const double v = require_speed(seg, "phase_form_wavelength");
    const double l = v * seg.duration;
    const double lambda_db = de_broglie_wavelength(species, v, k);
    return -species.m_gravitational * potential_at(field, seg.x) * l *
           species.m_inertial * lambda_db / (2.0 * std::numbers::pi * k.hbar * k.hbar);
}

double phase_form_ratio(const PathSegment& seg, const AtomSpecies& species,
                        const UniformGravityField& field, const PhysicalConstants& k) {
    const double v = require_speed(seg, "phase_form_ratio");
    const double l = v * seg.duration;
    const double lambda_db = de_broglie_wavelength(species, v, k);
    const double e_grav = -species.m_gravitational * potential_at(field, seg.x);
    const double e_kin = 0.5 * species.m_inertial * v * v;
    return (e_grav / (2.0 * e_kin)) * (2.0 * std::numbers::pi * l / lambda_db);
}

double differential_phase(const Path& path_a, const Path& path_b,
                          const AtomSpecies& species, const UniformGravityField& field,
                          const PhysicalConstants& k) {
    return path_phase(path_a, species, field, k).phase -
           path_phase(path_b, species, field, k).phase;
}

double reduced_de_broglie_wavelength(const AtomSpecies& species, double v1, double v2,
                                     const PhysicalConstants& k) {
    if (!(v1 > 0.0) || !(v2 > 0.0))
        throw std::domain_error("reduced_de_broglie_wavelength: speeds must be > 0");
    if (v1 == v2)
        throw std::domain_error("reduced_de_broglie_wavelength: speeds must differ");
    // 1/lambda = m(v1 - v2)/(2 pi hbar)
    return 2.0 * std::numbers::pi * k.hbar / (species.m_inertial * (v1 - v2));
}

std::string path_to_json_text(const Path& path) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : path.segments) {
        nlohmann::json seg{{"x_m", s.x}, {"duration_s", s.duration}};
        if (s.v)
            seg["v_mps"] = *s.v;
        else
            seg["v_mps"] = nullptr;
        segs.push_back(seg);
    }
    return nlohmann::json{{"segments", segs}}.dump();
}

Path path_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("segments") || !j["segments"].is_array())
        throw std::domain_error("path: missing 'segments' array");
    Path p;
    for (const auto& seg : j["segments"]) {
        PathSegment s{};
        s.x = seg.at("x_m").get<double>();
        s.duration = seg.at("duration_s").get<double>();
        if (seg.contains("v_mps") && !seg["v_mps"].is_null())
            s.v = seg["v_mps"].get<double>();
        p.segments.push_back(s);
    }
    p.validate();
    return p;
}

}  // namespace gravsim
