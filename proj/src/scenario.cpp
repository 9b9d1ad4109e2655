#include "gravsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gravsim/clock.hpp"
#include "gravsim/conversions.hpp"
#include "gravsim/oracle/double_slit.hpp"
#include "gravsim/oracle/evolve.hpp"

namespace gravsim::scenario {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::domain_error(path + ": " + what);
}

// Strict reader over a JSON object: typed field access with body.<field>
// error paths, unknown keys rejected on finish().
class BodyReader {
  public:
    explicit BodyReader(const nlohmann::json& j, std::string path = "body")
        : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected a JSON object");
    }

    double number(const std::string& key) {
        require(key);
        return as_number(key);
    }
    double number_or(const std::string& key, double fallback) {
        if (!j_.contains(key)) return fallback;
        return as_number(key);
    }
    std::size_t integer_or(const std::string& key, std::size_t fallback) {
        if (!j_.contains(key)) return fallback;
        seen_.push_back(key);
        if (!j_[key].is_number_integer() || j_[key].get<long long>() < 0)
            fail(path_ + "." + key, "expected a non-negative integer");
        return j_[key].get<std::size_t>();
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const nlohmann::json& raw(const std::string& key) {
        require(key);
        return j_[key];
    }

    AtomSpecies species(const std::string& key) {
        require(key);
        const auto& node = j_[key];
        AtomSpecies s;
        if (node.is_string()) {
            try {
                s = species_by_label(node.get<std::string>());
            } catch (const std::domain_error& e) {
                fail(path_ + "." + key, e.what());
            }
        } else if (node.is_object()) {
            try {
                s = species_from_json_text(node.dump());
            } catch (const std::exception& e) {
                fail(path_ + "." + key, e.what());
            }
        } else {
            fail(path_ + "." + key, "expected a species label or inline object");
        }
        if (j_.contains("eta")) {
            seen_.push_back("eta");
            if (!j_["eta"].is_number()) fail(path_ + ".eta", "expected a number");
            s = s.with_ep_ratio(j_["eta"].get<double>());
        }
        return s;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
                fail(path_ + "." + it.key(), "unknown field");
    }

  private:
    void require(const std::string& key) {
        if (!j_.contains(key)) fail(path_ + "." + key, "missing required field");
        seen_.push_back(key);
    }
    double as_number(const std::string& key) {
        if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
            seen_.push_back(key);
        if (!j_[key].is_number()) fail(path_ + "." + key, "expected a number");
        return j_[key].get<double>();
    }

    const nlohmann::json& j_;
    std::string path_;
    std::vector<std::string> seen_;
};

nlohmann::json species_echo(const AtomSpecies& s) {
    return {{"label", s.label},
            {"m_inertial_kg", s.m_inertial},
            {"m_gravitational_kg", s.m_gravitational},
            {"nu0_hz", s.nu0}};
}

GravimetrySetup setup_from_body(BodyReader& r) {
    GravimetrySetup setup;
    setup.species = r.species("species");
    setup.field = UniformGravityField{r.number("g_mps2"), 0.0};
    setup.pulses = RamanPulsePair::resonant(r.number("kappa_rad_per_m"), setup.species);
    setup.sequence = PulseSequence::mach_zehnder(r.number("T_s"));
    setup.initial_velocity = r.number_or("initial_velocity_mps", 0.0);
    setup.validate();
    return setup;
}

nlohmann::json setup_echo(const GravimetrySetup& setup) {
    return {{"species", species_echo(setup.species)},
            {"g_mps2", setup.field.g},
            {"kappa_rad_per_m", setup.pulses.kappa},
            {"T_s", setup.sequence.T},
            {"initial_velocity_mps", setup.initial_velocity}};
}

double max_mutual_rel_dev(const std::vector<double>& values) {
    double dev = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double scale =
                std::max({std::abs(values[i]), std::abs(values[j]), 1e-300});
            dev = std::max(dev, std::abs(values[i] - values[j]) / scale);
        }
    return dev;
}

std::string fmt12(double v) {
    if (v == 0.0) v = 0.0;  // fold negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

}  // namespace

RunReport run_gravimeter(const nlohmann::json& body) {
    BodyReader r(body);
    GravimetrySetup setup = setup_from_body(r);

    RunReport rep;
    rep.kind = "gravimeter";
    rep.inputs = setup_echo(setup);

    if (r.has("scan")) {
        const auto& scan = r.raw("scan");
        BodyReader sr(scan, "body.scan");
        if (!scan.contains("parameter") || !scan["parameter"].is_string())
            fail("body.scan.parameter", "missing or non-string");
        if (!scan.contains("values") || !scan["values"].is_array() ||
            scan["values"].empty())
            fail("body.scan.values", "missing or empty array");
        const std::string parameter = scan["parameter"].get<std::string>();
        std::vector<double> values;
        for (const auto& v : scan["values"]) {
            if (!v.is_number()) fail("body.scan.values", "expected numbers");
            values.push_back(v.get<double>());
        }
        r.finish();
        try {
            rep.fringe_rows = fringe_scan(setup, parameter, values);
        } catch (const std::invalid_argument& e) {
            fail("body.scan.parameter", e.what());
        }
        rep.inputs["scan"] = {{"parameter", parameter}, {"values", values}};
        return rep;
    }
    r.finish();

    const double eta = setup.species.ep_ratio();
    const double phase = gravimeter_phase(setup);
    const double phase_paths = gravimeter_phase_from_paths(setup);
    const Populations pops = output_populations(phase, 1.0);
    const InterferometerGeometry geo = build_geometry(setup);

    rep.results.push_back({"phase_rad", phase, "rad"});
    std::vector<double> forms{phase};
    if (eta == 1.0) {
        const double p_db = phase_debroglie_form(setup);
        const double p_c = phase_compton_form(setup);
        rep.results.push_back({"phase_debroglie_rad", p_db, "rad"});
        rep.results.push_back({"phase_compton_rad", p_c, "rad"});
        forms.push_back(p_db);
        forms.push_back(p_c);
    } else {
        rep.notes.push_back(
            "wavelength/Compton forms omitted: stated only for m_g = m_i");
    }
    rep.results.push_back({"phase_path_integral_rad", phase_paths, "rad"});
    rep.results.push_back({"p_a", pops.p_a, "1"});
    rep.results.push_back({"p_b", pops.p_b, "1"});
    rep.results.push_back({"separation_l_m", geo.separation_l, "m"});

    if (forms.size() > 1)
        rep.identity_checks.push_back({"phase_forms_mutual", max_mutual_rel_dev(forms), "rel"});
    rep.identity_checks.push_back(
        {"phase_vs_path_integral",
         std::abs(phase - phase_paths) / std::max(std::abs(phase), 1e-300), "rel"});
    return rep;
}

RunReport run_clock_compare(const nlohmann::json& body) {
    BodyReader r(body);
    const AtomSpecies species = r.species("species");
    const UniformGravityField field{r.number("g_mps2"), 0.0};
    const double x1 = r.number("x1_m");
    const double x2 = r.number("x2_m");
    const double duration = r.number("duration_s");
    const double nu = r.number_or("nu_hz", species.nu0);
    r.finish();

    const ClockComparison cmp{OscillatorClock{nu, x1, species},
                              OscillatorClock{nu, x2, species}, duration};
    const double dtr = relative_dilation(cmp, field);
    const double dtr_ep = relative_dilation_ep(cmp, field);
    const double acc1 = accumulated_dilation(cmp.clock_a, field, duration);
    const double acc2 = accumulated_dilation(cmp.clock_b, field, duration);

    RunReport rep;
    rep.kind = "clock-compare";
    rep.inputs = {{"species", species_echo(species)}, {"g_mps2", field.g},
                  {"x1_m", x1},                       {"x2_m", x2},
                  {"duration_s", duration},           {"nu_hz", nu}};
    rep.results.push_back({"delta_t_r_s", dtr, "s"});
    rep.results.push_back({"delta_t_r_ep_s", dtr_ep, "s"});
    rep.results.push_back({"accumulated_x1_s", acc1, "s"});
    rep.results.push_back({"accumulated_x2_s", acc2, "s"});
    rep.identity_checks.push_back(
        {"relative_vs_accumulated_difference",
         std::abs(dtr - (acc1 - acc2)) / std::max(std::abs(dtr), 1e-300), "rel"});
    return rep;
}

RunReport run_compton_compare(const nlohmann::json& body) {
    BodyReader r(body);
    GravimetrySetup setup = setup_from_body(r);
    r.finish();

    const double phase = gravimeter_phase(setup);
    const double l = build_geometry(setup).separation_l;
    const auto compton = compton_time_resolution(setup.species, std::abs(phase));
    const ClockComparison cmp{OscillatorClock{setup.species.nu0, l, setup.species},
                              OscillatorClock{setup.species.nu0, 0.0, setup.species},
                              setup.sequence.T};
    const double clock_dt = relative_dilation(cmp, setup.field);
    const double ratio = mass_to_photon_sensitivity_ratio(setup.species, setup.species.nu0);

    RunReport rep;
    rep.kind = "compton-compare";
    rep.inputs = setup_echo(setup);
    rep.results.push_back({"phase_rad", phase, "rad"});
    rep.results.push_back({"compton_delta_t_s", compton.seconds, "s"});
    rep.results.push_back({"clock_delta_t_r_s", clock_dt, "s"});
    rep.results.push_back({"ratio_mc2_h_nu0", ratio, "1"});
    rep.identity_checks.push_back(
        {"compton_dt_vs_clock_dt",
         std::abs(compton.seconds - clock_dt) / std::max(std::abs(clock_dt), 1e-300),
         "rel"});
    rep.notes.push_back(std::string(compton.note));
    rep.notes.push_back(
        "the equality of the two delta-t rows is the unit conversion itself");
    return rep;
}

RunReport run_oracle_verify(const nlohmann::json& body) {
    BodyReader r(body);
    oracle::OracleParams p;
    p.m_i = r.number_or("m_i", p.m_i);
    p.m_g = r.number_or("m_g", p.m_g);
    p.g = r.number_or("g", p.g);
    p.kappa = r.number_or("kappa", p.kappa);
    p.T = r.number_or("T", p.T);
    p.dt = r.number_or("dt", p.dt);
    p.n_grid = r.integer_or("n_grid", p.n_grid);
    p.sigma0 = r.number_or("sigma0", p.sigma0);
    p.x0 = r.number_or("x0", p.x0);
    p.v0 = r.number_or("v0", p.v0);
    r.finish();
    try {
        p.validate();
    } catch (const std::domain_error& e) {
        fail("body", e.what());
    }

    const auto result = oracle::run_interferometer_numeric(p);
    const double analytic = oracle::analytic_interferometer_phase(p);
    const double dev = std::abs(std::remainder(result.phase - analytic,
                                               2.0 * std::numbers::pi));
    constexpr double tolerance = 1e-6;  // rad

    RunReport rep;
    rep.kind = "oracle-verify";
    rep.inputs = {{"m_i", p.m_i},   {"m_g", p.m_g},       {"g", p.g},
                  {"kappa", p.kappa}, {"T", p.T},         {"dt", p.dt},
                  {"n_grid", p.n_grid}, {"sigma0", p.sigma0}, {"x0", p.x0},
                  {"v0", p.v0}};
    rep.results.push_back({"extracted_phase_rad", result.phase, "rad"});
    rep.results.push_back({"analytic_phase_rad", analytic, "rad"});
    rep.results.push_back({"abs_deviation_rad", dev, "rad"});
    rep.results.push_back({"p_a", result.p_a, "1"});
    rep.results.push_back({"p_b", result.p_b, "1"});
    rep.results.push_back(
        {"overlap_magnitude", result.diagnostics.overlap_magnitude, "1"});
    rep.results.push_back({"norm_drift", result.diagnostics.norm_drift, "1"});
    rep.results.push_back({"pass", dev <= tolerance ? 1.0 : 0.0, "bool"});
    rep.identity_checks.push_back({"oracle_vs_analytic", dev, "rad"});
    rep.warnings = result.diagnostics.warnings;
    rep.pass = dev <= tolerance;
    if (!rep.pass)
        rep.warnings.push_back("verification failed: deviation above 1e-6 rad");
    return rep;
}

RunReport run_double_slit(const nlohmann::json& body) {
    BodyReader r(body);
    oracle::DoubleSlitParams p;
    p.slit_separation = r.number_or("slit_separation", p.slit_separation);
    p.slit_width = r.number_or("slit_width", p.slit_width);
    p.mass = r.number_or("mass", p.mass);
    p.v = r.number_or("v", p.v);
    p.time = r.number_or("time", p.time);
    p.n_grid = r.integer_or("n_grid", p.n_grid);
    r.finish();
    try {
        p.validate();
    } catch (const std::domain_error& e) {
        fail("body", e.what());
    }

    const auto result = oracle::double_slit_propagate(p);
    const double measured = oracle::extract_fringe_spacing(result.intensity, result.x);

    RunReport rep;
    rep.kind = "double-slit";
    rep.inputs = {{"slit_separation", p.slit_separation},
                  {"slit_width", p.slit_width},
                  {"mass", p.mass},
                  {"v", p.v},
                  {"time", p.time},
                  {"n_grid", p.n_grid}};
    rep.results.push_back({"spacing_measured", measured, "length"});
    rep.results.push_back({"spacing_predicted", result.predicted_spacing, "length"});
    rep.results.push_back({"far_field", result.far_field ? 1.0 : 0.0, "bool"});
    rep.identity_checks.push_back(
        {"spacing_vs_fraunhofer",
         std::abs(measured - result.predicted_spacing) / result.predicted_spacing,
         "rel"});
    rep.warnings = result.warnings;
    rep.profile_rows.reserve(result.x.size());
    for (std::size_t i = 0; i < result.x.size(); ++i)
        rep.profile_rows.emplace_back(result.x[i], result.intensity[i]);
    return rep;
}

RunReport run_scenario(const std::string& kind, const nlohmann::json& body) {
    if (kind == "gravimeter") return run_gravimeter(body);
    if (kind == "clock-compare") return run_clock_compare(body);
    if (kind == "compton-compare") return run_compton_compare(body);
    if (kind == "oracle-verify") return run_oracle_verify(body);
    if (kind == "double-slit") return run_double_slit(body);
    throw std::domain_error("unknown scenario kind '" + kind + "'");
}

std::string to_csv(const RunReport& rep) {
    std::ostringstream out;
    if (!rep.profile_rows.empty()) {
        out << "x,intensity\n";
        for (const auto& [x, intensity] : rep.profile_rows)
            out << fmt12(x) << ',' << fmt12(intensity) << '\n';
        return out.str();
    }
    if (!rep.fringe_rows.empty()) {
        out << "value,phase_rad,p_a,p_b\n";
        for (const auto& row : rep.fringe_rows)
            out << fmt12(row.value) << ',' << fmt12(row.phase) << ',' << fmt12(row.p_a)
                << ',' << fmt12(row.p_b) << '\n';
        return out.str();
    }
    out << "quantity,value,unit\n";
    for (const auto& v : rep.results)
        out << v.name << ',' << fmt12(v.value) << ',' << v.unit << '\n';
    for (const auto& c : rep.identity_checks)
        out << "check_" << c.label << ',' << fmt12(c.deviation) << ',' << c.unit << '\n';
    return out.str();
}

std::string to_json_text(const RunReport& rep) {
    nlohmann::json j;
    j["kind"] = rep.kind;
    j["inputs"] = rep.inputs;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& v : rep.results)
        results.push_back({{"name", v.name}, {"value", v.value}, {"unit", v.unit}});
    j["results"] = results;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.identity_checks)
        checks.push_back(
            {{"label", c.label}, {"deviation", c.deviation}, {"unit", c.unit}});
    j["identity_checks"] = checks;
    j["notes"] = rep.notes;
    j["warnings"] = rep.warnings;
    j["pass"] = rep.pass;
    if (!rep.fringe_rows.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : rep.fringe_rows)
            rows.push_back({{"value", row.value},
                            {"phase_rad", row.phase},
                            {"p_a", row.p_a},
                            {"p_b", row.p_b}});
        j["fringe_rows"] = rows;
    }
    if (!rep.profile_rows.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [x, intensity] : rep.profile_rows)
            rows.push_back({{"x", x}, {"intensity", intensity}});
        j["profile_rows"] = rows;
    }
    return j.dump(2) + "\n";
}

std::string summary_text(const RunReport& rep) {
    std::ostringstream out;
    out << rep.kind << ": " << (rep.pass ? "ok" : "FAILED") << '\n';
    for (const auto& v : rep.results)
        out << "  " << v.name << " = " << fmt12(v.value) << ' ' << v.unit << '\n';
    for (const auto& c : rep.identity_checks)
        out << "  check " << c.label << ": deviation " << fmt12(c.deviation) << ' '
            << c.unit << '\n';
    if (!rep.fringe_rows.empty())
        out << "  fringe rows: " << rep.fringe_rows.size() << '\n';
    if (!rep.profile_rows.empty())
        out << "  profile rows: " << rep.profile_rows.size() << '\n';
    for (const auto& n : rep.notes) out << "  note: " << n << '\n';
    for (const auto& w : rep.warnings) out << "  warning: " << w << '\n';
    out << "  wall time: " << rep.wall_ms << " ms\n";
    return out.str();
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> list = [] {
        std::vector<Preset> p;
        p.push_back({"cs-gravimeter", "gravimeter",
                     {{"species", "Cs-133"},
                      {"g_mps2", 9.8},
                      {"kappa_rad_per_m", 1.4748e7},
                      {"T_s", 0.1},
                      {"initial_velocity_mps", 0.0}}});
        p.push_back({"scaled-oracle", "oracle-verify",
                     {{"m_i", 1.0},
                      {"m_g", 1.0},
                      {"g", 0.5},
                      {"kappa", 10.0},
                      {"T", 1.0},
                      {"dt", 5.0e-4},
                      {"n_grid", 4096},
                      {"sigma0", 0.5},
                      {"x0", 0.0},
                      {"v0", 0.0}}});
        p.push_back({"cs-clock", "clock-compare",
                     {{"species", "Cs-133"},
                      {"g_mps2", 9.8},
                      {"x1_m", 1.0},
                      {"x2_m", 0.0},
                      {"duration_s", 1.0}}});
        p.push_back({"scaled-double-slit", "double-slit",
                     {{"slit_separation", 1.0},
                      {"slit_width", 0.04},
                      {"mass", 1.0},
                      {"v", 50.0},
                      {"time", 4.0},
                      {"n_grid", 65536}}});
        p.push_back({"cs-compton", "compton-compare",
                     {{"species", "Cs-133"},
                      {"g_mps2", 9.8},
                      {"kappa_rad_per_m", 1.4748e7},
                      {"T_s", 0.1}}});
        return p;
    }();
    return list;
}

nlohmann::json preset_body(const std::string& name, const std::string& kind) {
    for (const auto& p : presets()) {
        if (p.name != name) continue;
        if (p.kind != kind)
            throw std::domain_error("preset '" + name + "' belongs to kind '" + p.kind +
                                    "', not '" + kind + "'");
        return p.body;
    }
    throw std::domain_error("unknown preset '" + name + "'");
}

std::string default_preset_for(const std::string& kind) {
    for (const auto& p : presets())
        if (p.kind == kind) return p.name;
    throw std::domain_error("no preset for kind '" + kind + "'");
}

ScenarioFile parse_scenario_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::domain_error("scenario: expected a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::domain_error("scenario.kind: missing or non-string");
    ScenarioFile f;
    f.kind = j["kind"].get<std::string>();
    const auto& kinds = known_kinds();
    if (std::find(kinds.begin(), kinds.end(), f.kind) == kinds.end())
        throw std::domain_error("scenario.kind: unknown kind '" + f.kind + "'");
    if (!j.contains("body") || !j["body"].is_object())
        throw std::domain_error("scenario.body: missing or non-object");
    f.body = j["body"];
    f.output_format = "csv";
    if (j.contains("output")) {
        const auto& o = j["output"];
        if (!o.is_object()) throw std::domain_error("scenario.output: expected an object");
        f.output_path = o.value("path", std::string{});
        f.output_format = o.value("format", std::string{"csv"});
        if (f.output_format != "csv" && f.output_format != "json")
            throw std::domain_error("scenario.output.format: expected 'csv' or 'json'");
    }
    return f;
}

}  // namespace gravsim::scenario
