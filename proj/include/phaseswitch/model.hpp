// Domain types shared by every module of the double-lambda switching simulator.
//
// Unit convention: every rate, Rabi frequency and detuning is stored in units
// of gamma_3 (the |3> coherence half-width). The CLI converts from MHz with
// gamma_3 / 2pi = 5.4 MHz.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaseswitch {

using complex = std::complex<double>;

/// gamma_3 / 2pi in MHz, the natural linewidth used for unit conversion.
inline constexpr double kGamma3MHz = 5.4;

/// Tolerance on the multiphoton closure residual (Dp - D1) - (Dc - D2).
inline constexpr double kClosureTolerance = 1e-12;

/// Lower bound on |Lambda| below which the weak-field system is singular.
inline constexpr double kSingularLambda = 1e-30;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a steady-state operation hits |Lambda| ~ 0.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation's parameter preconditions are violated.
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

double normalize_phase(double phase);

/// Complex Rabi frequency amplitude * exp(i phase). Phase is kept in (-pi, pi].
class ComplexRabi {
public:
    ComplexRabi() = default;
    ComplexRabi(double amplitude, double phase);

    static ComplexRabi from_value(complex value);

    double amplitude() const { return amplitude_; }
    double phase() const { return phase_; }
    complex value() const { return std::polar(amplitude_, phase_); }

    /// Same amplitude, phase advanced by `delta`.
    ComplexRabi shifted(double delta) const { return {amplitude_, phase_ + delta}; }

    bool operator==(const ComplexRabi&) const = default;

private:
    double amplitude_ = 0.0;
    double phase_ = 0.0;
};

struct FieldSet {
    ComplexRabi omega_p;  // probe, |1>-|3>
    ComplexRabi omega_c;  // control, |1>-|4>
    ComplexRabi omega_1;  // coupling 1, |2>-|3>
    ComplexRabi omega_2;  // coupling 2, |2>-|4>

    bool operator==(const FieldSet&) const = default;
};

struct Detunings {
    double delta_p = 0.0;
    double delta_1 = 0.0;
    double delta_c = 0.0;
    double delta_2 = 0.0;

    /// (Dp - D1) - (Dc - D2); zero for a time-independent rotating frame.
    double closure_residual() const { return (delta_p - delta_1) - (delta_c - delta_2); }

    bool operator==(const Detunings&) const = default;
};

struct Decays {
    double gamma_2 = 0.0;  // ground-state coherence decay
    double gamma_3 = 1.0;  // |3> coherence half-width
    double gamma_4 = 1.0;  // |4> coherence half-width

    bool operator==(const Decays&) const = default;
};

struct Medium {
    double k13_ell = 0.0;  // K13 * l
    double k14_ell = 0.0;  // K14 * l
    int n_slices = 50;     // slices for fluorescence integrals along z
    double omega_ratio = 1.0;  // omega_c / omega_p

    bool operator==(const Medium&) const = default;
};

struct SystemParams {
    FieldSet fields;
    Detunings detunings;
    Decays decays;
    Medium medium;

    bool operator==(const SystemParams&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Printed loop phase phi_2 + phi_c - phi_1 - phi_p, normalized.
/// Throws DomainError if any amplitude is zero.
double loop_phase(const FieldSet& f);

/// Gauge-invariant interference phase arg(Omega_1 Omega_c / (Omega_2 Omega_p)),
/// i.e. phi_1 + phi_c - phi_2 - phi_p. Zero at the dark condition
/// Omega_1 Omega_c = Omega_2 Omega_p (for matched moduli). Coincides with
/// loop_phase() whenever phi_1 = phi_2 (mod pi).
double interference_phase(const FieldSet& f);

ValidationReport validate(const SystemParams& params);

/// Throws InvalidParameters carrying the report when validate() finds violations.
void require_valid(const SystemParams& params);

/// Omega = sqrt(|Omega_1|^2 + |Omega_2|^2).
double coupling_strength(const FieldSet& f);

/// Copy of `params` with Dp = delta and Dc shifted so the closure residual is kept.
SystemParams at_detuning(const SystemParams& params, double delta);

inline double mhz_to_gamma3(double mhz) { return mhz / kGamma3MHz; }
inline double gamma3_to_mhz(double g) { return g * kGamma3MHz; }

}  // namespace phaseswitch
