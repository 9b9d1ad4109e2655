#include "gravsim/species.hpp"

#include <json.hpp>

#include "gravsim/constants.hpp"

namespace gravsim {

namespace {
// Preset data. Masses from the CODATA 2018 relative atomic masses times the
// atomic mass unit; nu0 values are the defining/accepted hyperfine splittings.
struct SpeciesPreset {
    const char* label;
    double mass_kg;
    double nu0_hz;
};

constexpr SpeciesPreset kPresets[] = {
    {"Cs-133", 2.20694650e-25, 9192631770.0},
    {"Rb-87", 86.909180531 * codata2018::atomic_mass_unit, 6834682610.904},
};
}  // namespace

AtomSpecies cesium133() { return species_by_label("Cs-133"); }
AtomSpecies rubidium87() { return species_by_label("Rb-87"); }

const std::vector<AtomSpecies>& species_registry() {
    static const std::vector<AtomSpecies> registry = [] {
        std::vector<AtomSpecies> v;
        for (const auto& p : kPresets)
            v.push_back(AtomSpecies{p.label, p.mass_kg, p.mass_kg, p.nu0_hz});
        return v;
    }();
    return registry;
}

AtomSpecies species_by_label(const std::string& label) {
    for (const auto& s : species_registry())
        if (s.label == label) return s;
    throw std::domain_error("unknown species label '" + label + "'");
}

AtomSpecies species_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object())
        throw std::domain_error("species: expected a JSON object");
    for (const char* key : {"label", "m_inertial_kg", "nu0_hz"})
        if (!j.contains(key))
            throw std::domain_error(std::string("species: missing field '") + key + "'");
    AtomSpecies s;
    s.label = j.at("label").get<std::string>();
    s.m_inertial = j.at("m_inertial_kg").get<double>();
    s.m_gravitational = j.value("m_gravitational_kg", s.m_inertial);
    s.nu0 = j.at("nu0_hz").get<double>();
    s.validate();
    return s;
}

}  // namespace gravsim
