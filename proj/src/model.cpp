#include "phaseswitch/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace phaseswitch {

namespace {

constexpr double kPi = std::numbers::pi;

void check_nonneg(std::vector<std::string>& out, const char* name, double v) {
    if (!std::isfinite(v) || v < 0.0) {
        out.push_back(std::string(name) + " must be finite and >= 0 (got " + std::to_string(v) + ")");
    }
}

void check_positive(std::vector<std::string>& out, const char* name, double v) {
    if (!std::isfinite(v) || v <= 0.0) {
        out.push_back(std::string(name) + " must be finite and > 0 (got " + std::to_string(v) + ")");
    }
}

void check_finite(std::vector<std::string>& out, const char* name, double v) {
    if (!std::isfinite(v)) {
        out.push_back(std::string(name) + " must be finite");
    }
}

}  // namespace

double normalize_phase(double phase) {
    if (!std::isfinite(phase)) {
        throw DomainError("normalize_phase: non-finite phase");
    }
    double r = std::remainder(phase, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

ComplexRabi::ComplexRabi(double amplitude, double phase) {
    if (!std::isfinite(amplitude) || amplitude < 0.0) {
        throw DomainError("ComplexRabi: amplitude must be finite and >= 0");
    }
    amplitude_ = amplitude;
    phase_ = normalize_phase(phase);
}

ComplexRabi ComplexRabi::from_value(complex value) {
    const double a = std::abs(value);
    return {a, a > 0.0 ? std::arg(value) : 0.0};
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << "violation: " << v << '\n';
    for (const auto& w : warnings) os << "warning: " << w << '\n';
    return os.str();
}

double loop_phase(const FieldSet& f) {
    if (f.omega_p.amplitude() <= 0.0 || f.omega_c.amplitude() <= 0.0 ||
        f.omega_1.amplitude() <= 0.0 || f.omega_2.amplitude() <= 0.0) {
        throw DomainError("loop_phase: undefined when any field amplitude is zero");
    }
    return normalize_phase(f.omega_2.phase() + f.omega_c.phase() - f.omega_1.phase() -
                           f.omega_p.phase());
}

double interference_phase(const FieldSet& f) {
    if (f.omega_p.amplitude() <= 0.0 || f.omega_c.amplitude() <= 0.0 ||
        f.omega_1.amplitude() <= 0.0 || f.omega_2.amplitude() <= 0.0) {
        throw DomainError("interference_phase: undefined when any field amplitude is zero");
    }
    return normalize_phase(f.omega_1.phase() + f.omega_c.phase() - f.omega_2.phase() -
                           f.omega_p.phase());
}

ValidationReport validate(const SystemParams& params) {
    ValidationReport report;
    auto& v = report.violations;

    const auto& f = params.fields;
    for (const auto& [name, field] : {std::pair{"omega_p", f.omega_p}, std::pair{"omega_c", f.omega_c},
                                      std::pair{"omega_1", f.omega_1}, std::pair{"omega_2", f.omega_2}}) {
        check_nonneg(v, name, field.amplitude());
        check_finite(v, name, field.phase());
    }

    const auto& d = params.detunings;
    check_finite(v, "delta_p", d.delta_p);
    check_finite(v, "delta_1", d.delta_1);
    check_finite(v, "delta_c", d.delta_c);
    check_finite(v, "delta_2", d.delta_2);
    if (std::isfinite(d.closure_residual()) && std::abs(d.closure_residual()) >= kClosureTolerance) {
        v.push_back("multiphoton closure violated: (delta_p - delta_1) - (delta_c - delta_2) = " +
                    std::to_string(d.closure_residual()));
    }

    const auto& g = params.decays;
    check_nonneg(v, "gamma_2", g.gamma_2);
    check_positive(v, "gamma_3", g.gamma_3);
    check_positive(v, "gamma_4", g.gamma_4);
    if (std::isfinite(g.gamma_2) && std::isfinite(g.gamma_3) && g.gamma_2 > 0.1 * g.gamma_3) {
        report.warnings.push_back("gamma_2 > 0.1 gamma_3: weak-dephasing approximation is poor");
    }

    const auto& m = params.medium;
    check_nonneg(v, "k13_ell", m.k13_ell);
    check_nonneg(v, "k14_ell", m.k14_ell);
    check_positive(v, "omega_ratio", m.omega_ratio);
    if (m.n_slices < 1) {
        v.push_back("n_slices must be >= 1");
    }
    return report;
}

void require_valid(const SystemParams& params) {
    const auto report = validate(params);
    if (!report.ok()) {
        throw InvalidParameters("invalid parameters:\n" + report.to_string());
    }
}

double coupling_strength(const FieldSet& f) {
    return std::hypot(f.omega_1.amplitude(), f.omega_2.amplitude());
}

SystemParams at_detuning(const SystemParams& params, double delta) {
    SystemParams out = params;
    out.detunings.delta_p = delta;
    out.detunings.delta_c = delta - params.detunings.delta_1 + params.detunings.delta_2;
    return out;
}

}  // namespace phaseswitch
