// Closed-form weak-field steady state of the double-lambda system.
//
// With a1 ~ 1 the first-order amplitudes solve
//   delta_p a3 + Omega_p + Omega_1 a2 = 0
//   delta_c a4 + Omega_c + Omega_2 a2 = 0
//   delta_1 a2 + Omega_1* a3 + Omega_2* a4 = 0
// whose determinant (times delta_p delta_c) is Lambda.

#pragma once

#include "phaseswitch/model.hpp"

namespace phaseswitch {

struct ComplexDetunings {
    complex probe;    // delta_p = Dp + i gamma_3
    complex ground;   // delta_1 = Dp - D1 + i gamma_2
    complex control;  // delta_c = Dc + i gamma_4
};

ComplexDetunings complex_detunings(const SystemParams& params);

/// Lambda = delta_1 delta_c delta_p - delta_p |Omega_2|^2 - delta_c |Omega_1|^2.
complex lambda_determinant(const SystemParams& params);

struct SteadyCoherences {
    complex a2;
    complex a3;
    complex a4;
    double p3 = 0.0;
    double p4 = 0.0;
    complex lambda_det;
};

SteadyCoherences steady_coherences(const SystemParams& params);

enum class Interference { destructive, constructive, intermediate };

const char* to_string(Interference kind);

struct InterferenceResult {
    Interference kind = Interference::intermediate;
    /// (Omega_1 Omega_c - Omega_2 Omega_p) / (|Omega_1 Omega_c| + |Omega_2 Omega_p|).
    complex residual;
};

/// Classifies the one-photon / three-photon interference at two-photon resonance.
InterferenceResult interference_condition(const FieldSet& f);

/// Total scattering rate 2 gamma_3 P3 + 2 gamma_4 P4 (arbitrary units).
double fluorescence_density(const SystemParams& params);

}  // namespace phaseswitch
