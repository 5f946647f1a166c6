// Scenario layer: phase-switching waveforms, phase scans, switching efficiency,
// photon-number budget and the named parameter presets.
//
// Control-phase convention: a waveform or scan value Phi_c is the phase shift
// applied to the control field on top of its preset phase (what the EOM adds).
// The presets encode the FM-sideband phases Omega_1 ~ -Omega_2, Omega_c ~ -Omega_p,
// so Phi_c = 0 is the dark (destructive) configuration at delta = 0.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phaseswitch/model.hpp"
#include "phaseswitch/propagation.hpp"

namespace phaseswitch {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// start + k step for k = 0..floor((stop - start) / step), endpoint included
    /// when it lies on the lattice.
    std::vector<double> points() const;
    bool operator==(const GridSpec&) const = default;
};

enum class WaveformKind { sinusoid, square };

const char* to_string(WaveformKind kind);

struct PhaseWaveform {
    WaveformKind kind = WaveformKind::square;
    double frequency_hz = 2300.0;  // informational, the quasi-static solver is scale-free
    double amplitude = 0.0;        // radians
    double offset = 0.0;           // radians
    int samples_per_period = 128;

    /// sinusoid: amplitude cos(2 pi t/T) + offset; square: offset for t/T < 1/2,
    /// offset + amplitude afterwards.
    double phase_at(double t_over_t) const;
    bool operator==(const PhaseWaveform&) const = default;
};

/// Quasi-static transmission with the control phase shifted by `phi_c`.
struct PhasePoint {
    double phi_c = 0.0;
    std::optional<double> transmission_p;
    std::optional<double> transmission_c;
    double transmission_total = 0.0;
    PointStatus status = PointStatus::ok;
};

PhasePoint evaluate_phase_point(const SystemParams& params, double delta, const WeakInput& input, double phi_c);

struct SwitchSample {
    double t_over_t = 0.0;
    PhasePoint point;
};

std::vector<SwitchSample> switch_waveform(const SystemParams& params, const PhaseWaveform& waveform, double delta,
                                          const WeakInput& input);

struct SwitchingMetrics {
    double i_in = 0.0;
    double i_open = 0.0;   // transmitted, switch open (low)
    double i_close = 0.0;  // transmitted, switch closed (high)
    double eta = 0.0;
    std::vector<std::string> notes;  // ordering violations are reported, not clamped
};

/// eta = (high - low) / i_in with i_close = high, i_open = low.
SwitchingMetrics switching_efficiency(double high, double low, double i_in);

/// Plateau extremes of the total transmission (normalized to the incident power).
SwitchingMetrics efficiency_from_waveform(std::span<const SwitchSample> samples);

struct PhaseScan {
    std::vector<PhasePoint> rows;
    double argmax = 0.0;  // phi_c of maximum total transmission
    double argmin = 0.0;
};

PhaseScan phase_scan(const SystemParams& params, double delta, const WeakInput& input,
                     std::span<const double> phases);

/// Uniform grid over [-pi, pi] with `steps_per_pi` intervals per pi.
std::vector<double> phase_grid(int steps_per_pi = 64);

/// Distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

struct PhotonBudget {
    double g_p = 0.0;
    double g_c = 0.0;
    double n_p = 0.0;
    double alpha = 0.0;  // |Omega_2 g_p / (Omega_1 g_c)|^2
    double n_c = 0.0;
};

PhotonBudget photon_budget(const ComplexRabi& omega_1, const ComplexRabi& omega_2, double g_p, double g_c,
                           double n_p);

struct Scenario {
    std::string name;
    std::string description;
    SystemParams params;
    GridSpec grid;
    double delta = 0.0;  // operating point for single-point commands
    std::optional<PhaseWaveform> waveform;
    double fluorescence_scale = 1.0;

    WeakInput input() const { return input_from_fields(params.fields); }
};

const std::vector<std::string>& scenario_names();

/// Throws std::out_of_range for unknown names.
Scenario preset(std::string_view name);

}  // namespace phaseswitch
