#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gravsim/interferometer.hpp"

namespace gravsim::scenario {

// One scenario kind per CLI subcommand. Bodies are validated against the
// kind's schema (see docs/formats.md) before any computation; violations
// throw std::domain_error with a body.<field> path in the message.
inline const std::vector<std::string>& known_kinds() {
    static const std::vector<std::string> kinds{
        "gravimeter", "clock-compare", "double-slit", "oracle-verify",
        "compton-compare"};
    return kinds;
}

struct ReportValue {
    std::string name;
    double value;
    std::string unit;
};

struct IdentityCheck {
    std::string label;
    double deviation;
    std::string unit;  // "rel" or "rad"
};

struct RunReport {
    std::string kind;
    nlohmann::json inputs;  // fully resolved body, defaults materialized
    std::vector<ReportValue> results;
    std::vector<IdentityCheck> identity_checks;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;
    bool pass = true;
    double wall_ms = 0.0;  // reported in the summary only, never serialized

    // Kind-specific tables. When non-empty they form the CSV body.
    std::vector<FringePoint> fringe_rows;                 // gravimeter scans
    std::vector<std::pair<double, double>> profile_rows;  // double-slit x,intensity
};

RunReport run_gravimeter(const nlohmann::json& body);
RunReport run_clock_compare(const nlohmann::json& body);
RunReport run_compton_compare(const nlohmann::json& body);
RunReport run_oracle_verify(const nlohmann::json& body);
RunReport run_double_slit(const nlohmann::json& body);

// Dispatch on kind. Unknown kinds throw std::domain_error.
RunReport run_scenario(const std::string& kind, const nlohmann::json& body);

// Deterministic serializations: fixed row order, scientific notation with 12
// significant digits in CSV.
std::string to_csv(const RunReport& report);
std::string to_json_text(const RunReport& report);
// Human-readable recap (includes wall time; not part of the output contract).
std::string summary_text(const RunReport& report);

struct Preset {
    std::string name;
    std::string kind;
    nlohmann::json body;
};
const std::vector<Preset>& presets();
// Throws std::domain_error if the preset is unknown or belongs to another kind.
nlohmann::json preset_body(const std::string& name, const std::string& kind);
// The preset used when a subcommand is invoked with no scenario file.
std::string default_preset_for(const std::string& kind);

// Parse a scenario document {"kind":..., "body":..., "output":...?}.
struct ScenarioFile {
    std::string kind;
    nlohmann::json body;
    std::string output_path;    // empty = stdout
    std::string output_format;  // "csv" (default) or "json"
};
ScenarioFile parse_scenario_text(const std::string& text);

}  // namespace gravsim::scenario
