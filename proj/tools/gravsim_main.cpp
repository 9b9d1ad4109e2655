// gravsim: scenario runner for the gravimetry / time-dilation library.
//
//   gravsim <kind> [--scenario file.json] [--preset name]
//                  [--out path] [--format csv|json]
//
// Exit codes: 0 success, 2 input validation, 3 runtime/numerical failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gravsim/scenario.hpp"

namespace {

struct Options {
    std::string scenario_path;
    std::string preset;
    std::string out_path;
    std::string format;  // empty = resolved later
};

int run_kind(const std::string& kind, const Options& opt) {
    using namespace gravsim::scenario;

    nlohmann::json body;
    std::string out_path = opt.out_path;
    std::string format = opt.format;

    if (!opt.scenario_path.empty()) {
        std::ifstream in(opt.scenario_path);
        if (!in) {
            std::cerr << "error: cannot open scenario file '" << opt.scenario_path
                      << "'\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        const ScenarioFile file = parse_scenario_text(text.str());
        if (file.kind != kind)
            throw std::domain_error("scenario.kind is '" + file.kind +
                                    "' but the subcommand is '" + kind + "'");
        body = file.body;
        if (out_path.empty()) out_path = file.output_path;
        if (format.empty() && !file.output_format.empty()) format = file.output_format;
    } else {
        const std::string name = opt.preset.empty() ? default_preset_for(kind) : opt.preset;
        body = preset_body(name, kind);
    }
    if (format.empty()) format = "csv";

    const auto start = std::chrono::steady_clock::now();
    RunReport report = run_scenario(kind, body);
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();

    const std::string payload = format == "json" ? to_json_text(report) : to_csv(report);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 3;
        }
        out << payload;
    }
    std::cerr << summary_text(report);
    return report.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"atom-interferometer gravimetry vs gravitational clock comparison"};
    app.require_subcommand(1);

    Options opt;
    std::string kind;
    for (const auto& k : gravsim::scenario::known_kinds()) {
        auto* sub = app.add_subcommand(k, "run a '" + k + "' scenario");
        sub->add_option("--scenario", opt.scenario_path, "scenario JSON file");
        sub->add_option("--preset", opt.preset, "embedded preset name");
        sub->add_option("--out", opt.out_path, "output path (default stdout)");
        sub->add_option("--format", opt.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->callback([&kind, k] { kind = k; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run_kind(kind, opt);
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return 3;
    }
}
