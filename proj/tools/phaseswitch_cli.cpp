// Command-line front end: phaseswitch <subcommand> [--scenario NAME | --config PATH] ...

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "phaseswitch/config.hpp"
#include "phaseswitch/experiments.hpp"
#include "phaseswitch/runner.hpp"

int main(int argc, char** argv) {
    using namespace phaseswitch;

    CLI::App app{"Phase-controlled light switching in a double-lambda medium"};
    std::string command;
    std::string config_path;
    std::string scenario;
    std::string out_path;
    std::string svg_path;
    std::string units;
    bool strict = false;
    bool dump = false;

    app.add_option("command", command, "Subcommand")
        ->required()
        ->check(CLI::IsMember(subcommand_names()));
    app.add_option("--config", config_path, "Configuration file (key = value with [section] headers)")
        ->check(CLI::ExistingFile);
    app.add_option("--scenario", scenario, "Named preset")->check(CLI::IsMember(scenario_names()));
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--svg", svg_path, "SVG plot output path");
    app.add_option("--units", units, "Unit mode for config values and output")
        ->check(CLI::IsMember({"gamma3", "mhz"}));
    app.add_flag("--strict", strict, "Treat unknown config keys as errors");
    app.add_flag("--dump-config", dump, "Print the resolved configuration in gamma_3 units and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string text;
        if (!config_path.empty()) {
            std::ifstream f(config_path, std::ios::binary);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        if (config_path.empty() && scenario.empty()) {
            std::cerr << "error: one of --config or --scenario is required\n";
            return 2;
        }

        ParseOptions options;
        options.strict = strict;
        if (!units.empty()) options.units = parse_unit_mode(units);
        if (!scenario.empty()) options.scenario = scenario;
        const auto sub = parse_subcommand(command);
        options.check_params = sub != Subcommand::validate;

        RunConfig config = parse_config(text, options);
        if (!out_path.empty()) config.csv_path = out_path;
        if (!svg_path.empty()) config.svg_path = svg_path;

        if (dump) {
            std::cout << dump_config(config);
            return 0;
        }
        return run(sub, config, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
