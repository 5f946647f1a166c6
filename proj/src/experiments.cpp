#include "phaseswitch/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>

namespace phaseswitch {

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams fig2_base(double control_phase, double control_amplitude) {
    SystemParams p;
    p.fields.omega_1 = {1.0, 0.0};
    p.fields.omega_2 = {1.0, 0.0};
    p.fields.omega_p = {0.01, 0.0};
    p.fields.omega_c = {control_amplitude, control_phase};
    p.decays = {0.02, 1.0, 1.0};
    p.medium.k13_ell = 1.0;
    p.medium.k14_ell = 1.0;
    return p;
}

// FM-sideband phases: Omega_2 = -Omega_1, Omega_c = -Omega_p.
SystemParams sideband_base(double coupling_mhz) {
    SystemParams p;
    p.fields.omega_1 = {mhz_to_gamma3(coupling_mhz), 0.0};
    p.fields.omega_2 = {mhz_to_gamma3(coupling_mhz), kPi};
    p.fields.omega_p = {mhz_to_gamma3(0.2), 0.0};
    p.fields.omega_c = {mhz_to_gamma3(0.2), kPi};
    p.decays = {0.02, 1.0, 1.0};
    p.medium.k13_ell = 0.8;
    p.medium.k14_ell = 0.8;
    return p;
}

}  // namespace

std::vector<double> GridSpec::points() const {
    if (!(step > 0.0) || !(stop > start) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw DomainError("GridSpec: need finite start < stop and step > 0");
    }
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        out.push_back(start + static_cast<double>(k) * step);
    }
    return out;
}

const char* to_string(WaveformKind kind) { return kind == WaveformKind::square ? "square" : "sinusoid"; }

double PhaseWaveform::phase_at(double t_over_t) const {
    if (kind == WaveformKind::sinusoid) {
        return amplitude * std::cos(2.0 * kPi * t_over_t) + offset;
    }
    const double frac = t_over_t - std::floor(t_over_t);
    return frac < 0.5 ? offset : offset + amplitude;
}

PhasePoint evaluate_phase_point(const SystemParams& params, double delta, const WeakInput& input, double phi_c) {
    PhasePoint pt;
    pt.phi_c = phi_c;
    SystemParams local = at_detuning(params, delta);
    local.fields.omega_c = local.fields.omega_c.shifted(phi_c);
    const WeakInput shifted{input.probe, input.control * std::polar(1.0, phi_c)};
    try {
        const auto r = transfer(local, shifted);
        pt.transmission_p = r.transmission_p;
        pt.transmission_c = r.transmission_c;
        pt.transmission_total = r.transmission_total;
    } catch (const SingularityError&) {
        pt.status = PointStatus::singular;
        pt.transmission_total = std::nan("");
    } catch (const InvalidParameters&) {
        pt.status = PointStatus::invalid;
        pt.transmission_total = std::nan("");
    }
    return pt;
}

std::vector<SwitchSample> switch_waveform(const SystemParams& params, const PhaseWaveform& waveform, double delta,
                                          const WeakInput& input) {
    if (waveform.samples_per_period < 1) {
        throw DomainError("switch_waveform: samples_per_period must be >= 1");
    }
    std::vector<SwitchSample> out;
    out.reserve(static_cast<std::size_t>(waveform.samples_per_period));
    for (int k = 0; k < waveform.samples_per_period; ++k) {
        const double t = static_cast<double>(k) / waveform.samples_per_period;
        out.push_back({t, evaluate_phase_point(params, delta, input, waveform.phase_at(t))});
    }
    return out;
}

SwitchingMetrics switching_efficiency(double high, double low, double i_in) {
    if (!(i_in > 0.0)) {
        throw DomainError("switching_efficiency: incident intensity must be > 0");
    }
    SwitchingMetrics m;
    m.i_in = i_in;
    m.i_close = high;
    m.i_open = low;
    m.eta = (high - low) / i_in;
    if (low < 0.0) m.notes.push_back("open-state intensity is negative");
    if (low > high) m.notes.push_back("open-state intensity exceeds closed-state intensity");
    if (high > i_in) m.notes.push_back("closed-state intensity exceeds incident intensity");
    return m;
}

SwitchingMetrics efficiency_from_waveform(std::span<const SwitchSample> samples) {
    double high = -std::numeric_limits<double>::infinity();
    double low = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        if (s.point.status != PointStatus::ok) continue;
        high = std::max(high, s.point.transmission_total);
        low = std::min(low, s.point.transmission_total);
    }
    if (!std::isfinite(high)) {
        throw DomainError("efficiency_from_waveform: no admissible samples");
    }
    return switching_efficiency(high, low, 1.0);
}

PhaseScan phase_scan(const SystemParams& params, double delta, const WeakInput& input,
                     std::span<const double> phases) {
    PhaseScan scan;
    scan.rows.reserve(phases.size());
    double best = -std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    for (const double phi : phases) {
        if (!std::isfinite(phi)) {
            throw DomainError("phase_scan: non-finite phase");
        }
        const auto pt = evaluate_phase_point(params, delta, input, phi);
        if (pt.status == PointStatus::ok) {
            if (pt.transmission_total > best) {
                best = pt.transmission_total;
                scan.argmax = phi;
            }
            if (pt.transmission_total < worst) {
                worst = pt.transmission_total;
                scan.argmin = phi;
            }
        }
        scan.rows.push_back(pt);
    }
    return scan;
}

std::vector<double> phase_grid(int steps_per_pi) {
    if (steps_per_pi < 1) {
        throw DomainError("phase_grid: steps_per_pi must be >= 1");
    }
    std::vector<double> out;
    for (int k = -steps_per_pi; k <= steps_per_pi; ++k) {
        out.push_back(kPi * k / steps_per_pi);
    }
    return out;
}

double circular_distance(double a, double b) { return std::abs(normalize_phase(a - b)); }

PhotonBudget photon_budget(const ComplexRabi& omega_1, const ComplexRabi& omega_2, double g_p, double g_c,
                           double n_p) {
    if (!(omega_1.amplitude() > 0.0)) {
        throw DomainError("photon_budget: |Omega_1| must be > 0");
    }
    if (!(g_c > 0.0)) {
        throw DomainError("photon_budget: g_c must be > 0");
    }
    if (!(g_p > 0.0) || !(n_p >= 0.0)) {
        throw DomainError("photon_budget: need g_p > 0 and n_p >= 0");
    }
    PhotonBudget b;
    b.g_p = g_p;
    b.g_c = g_c;
    b.n_p = n_p;
    const double ratio = (omega_2.amplitude() * g_p) / (omega_1.amplitude() * g_c);
    b.alpha = ratio * ratio;
    b.n_c = b.alpha * n_p;
    return b;
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{"fig2a", "fig2b", "fig2c", "fig4", "fig5-sin", "fig5-square"};
    return names;
}

Scenario preset(std::string_view name) {
    Scenario s;
    s.name = std::string(name);
    s.grid = {-3.0, 3.0, 0.01};
    if (name == "fig2a") {
        s.description = "calculated probe transmission without control";
        s.params = fig2_base(0.0, 0.0);
    } else if (name == "fig2b") {
        s.description = "probe and control in phase, Omega_c(0) = Omega_p(0)";
        s.params = fig2_base(0.0, 0.01);
    } else if (name == "fig2c") {
        s.description = "probe and control in anti-phase, Omega_c(0) = -Omega_p(0)";
        s.params = fig2_base(kPi, 0.01);
    } else if (name == "fig4") {
        s.description = "FM-sideband probe and control, Omega_1/2pi = Omega_2/2pi = 4 MHz";
        s.params = sideband_base(4.0);
    } else if (name == "fig5-sin") {
        s.description = "sinusoidal control phase Phi_c = pi cos(2 pi f t), Omega_1/2pi = 4.5 MHz";
        s.params = sideband_base(4.5);
        s.waveform = PhaseWaveform{WaveformKind::sinusoid, 2300.0, kPi, 0.0, 128};
    } else if (name == "fig5-square") {
        s.description = "square-wave control phase between 0 and pi, Omega_1/2pi = 4.5 MHz";
        s.params = sideband_base(4.5);
        s.waveform = PhaseWaveform{WaveformKind::square, 2300.0, kPi, 0.0, 128};
    } else {
        throw std::out_of_range("unknown scenario: " + std::string(name));
    }
    return s;
}

}  // namespace phaseswitch
