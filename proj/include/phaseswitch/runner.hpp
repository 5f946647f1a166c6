// Subcommand execution for the command-line front end.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phaseswitch/config.hpp"
#include "phaseswitch/output.hpp"

namespace phaseswitch {

enum class Subcommand { spectrum, fluorescence, switching, phasescan, populations, dressed, steady, groupdelay, validate };

const std::vector<std::string>& subcommand_names();
Subcommand parse_subcommand(std::string_view name);

struct RunOutput {
    Table table;
    std::optional<PlotSpec> plot;
    std::vector<std::string> summary;  // "key = value" lines
    int exit_code = 0;
};

/// Computes the table, plot and summary for one subcommand without touching the filesystem.
RunOutput execute(Subcommand command, const RunConfig& config);

/// Runs `command` and writes the CSV to config.csv_path (or `out` when unset)
/// and the SVG to config.svg_path when set. Summary lines go to `out` when the
/// CSV goes to a file, otherwise to `log`. Returns the process exit status.
int run(Subcommand command, const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace phaseswitch
