#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gravsim {

// A particle under test. Gravitational mass is stored independently of the
// inertial mass so species violating the equivalence principle are
// first-class values.
struct AtomSpecies {
    std::string label;
    double m_inertial;        // kg
    double m_gravitational;   // kg
    double nu0;               // clock/hyperfine transition frequency, Hz

    double ep_ratio() const { return m_gravitational / m_inertial; }

    // Copy with m_gravitational = eta * m_inertial.
    AtomSpecies with_ep_ratio(double eta) const {
        AtomSpecies s = *this;
        s.m_gravitational = eta * m_inertial;
        return s;
    }

    void validate() const {
        if (!(m_inertial > 0.0))
            throw std::domain_error("AtomSpecies '" + label + "': m_inertial must be > 0");
        if (!(m_gravitational >= 0.0))
            throw std::domain_error("AtomSpecies '" + label + "': m_gravitational must be >= 0");
        if (!(nu0 > 0.0))
            throw std::domain_error("AtomSpecies '" + label + "': nu0 must be > 0");
    }
};

// Shipped presets (equal inertial and gravitational masses).
AtomSpecies cesium133();
AtomSpecies rubidium87();

const std::vector<AtomSpecies>& species_registry();

// Lookup by label in the registry. Throws std::domain_error if unknown.
AtomSpecies species_by_label(const std::string& label);

// Parse from a JSON document of the form
//   {"label": s, "m_inertial_kg": n, "m_gravitational_kg": n (optional,
//    default = m_inertial_kg), "nu0_hz": n}
AtomSpecies species_from_json_text(const std::string& text);

}  // namespace gravsim
