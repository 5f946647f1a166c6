// Line-oriented run configuration:
//
//   # comment            ; comment
//   scenario = fig2b     (keys before any section are global)
//   units = mhz
//   [fields]
//   omega_1_mhz = 4.0
//
// Plain rate keys are read in the active unit mode; a `_mhz` suffix is always
// MHz (Omega / 2pi). Phases are radians and accept `pi`, `-pi`, `pi/N`.
// K*l keys are the dimensionless ratios K l / gamma and are never converted.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phaseswitch/experiments.hpp"
#include "phaseswitch/model.hpp"

namespace phaseswitch {

enum class UnitMode { gamma3, mhz };

const char* to_string(UnitMode mode);
UnitMode parse_unit_mode(std::string_view text);

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, int line = 0);
    int line() const { return line_; }

private:
    int line_;
};

struct RunConfig {
    std::optional<std::string> scenario;
    SystemParams params;
    GridSpec grid{-3.0, 3.0, 0.01};  // gamma_3 units
    double delta = 0.0;              // operating point, gamma_3 units
    std::optional<PhaseWaveform> waveform;
    int phase_steps = 64;            // phase-scan intervals per pi
    double fluorescence_scale = 1.0;
    double delay_step = kDefaultDelayStep;
    UnitMode units = UnitMode::gamma3;
    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;
    std::vector<std::string> warnings;

    WeakInput input() const { return input_from_fields(params.fields); }
};

struct ParseOptions {
    bool strict = false;                         // unknown keys are errors instead of warnings
    std::optional<UnitMode> units;               // overrides the file's `units`
    std::optional<std::string> scenario;         // overrides the file's `scenario`
    bool check_params = true;                    // run model validation on the result
};

/// Throws ConfigError (with line number for syntax errors) or when the
/// resulting parameters fail model validation.
RunConfig parse_config(std::string_view text, const ParseOptions& options = {});

RunConfig config_from_scenario(const Scenario& scenario);

/// Explicit gamma_3-unit config text; parse_config(dump_config(c)) reproduces
/// every numeric parameter bit for bit.
std::string dump_config(const RunConfig& config);

}  // namespace phaseswitch
