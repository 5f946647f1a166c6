// Dressed states of the |2>-|3>-|4> manifold created by the two coupling fields.

#pragma once

#include <array>

#include <Eigen/Dense>

#include "phaseswitch/model.hpp"

namespace phaseswitch {

using Vec4 = Eigen::Vector4cd;

/// Components over (|1>, |2>, |3>, |4>).
struct DressedBasis {
    Vec4 plus;
    Vec4 zero;
    Vec4 minus;
    std::array<double, 3> shifts{};  // (Omega, 0, -Omega)
};

/// |+-> = (|2> -+ (Omega_1/Omega)|3> -+ (Omega_2/Omega)|4>) / sqrt(2),
/// |0>  = (Omega_2*/Omega)|3> - (Omega_1*/Omega)|4>.
/// These are eigenvectors of the coupling Hamiltonian H32 = -Omega_1, H42 = -Omega_2.
DressedBasis dressed_basis(const ComplexRabi& omega_1, const ComplexRabi& omega_2);

struct TransitionProbabilities {
    double p_pm = 0.0;  // |1> -> |+>, |-> combined, up to the common factor 1/Omega^2
    double p_0 = 0.0;   // |1> -> |0>
};

/// p_pm = |Omega_1* Omega_p + Omega_2* Omega_c|^2, p_0 = |Omega_2 Omega_p - Omega_1 Omega_c|^2.
/// Both are Omega^2 |<d|V|1>|^2 for the weak coupling V31 = -Omega_p, V41 = -Omega_c.
TransitionProbabilities transition_probabilities(const FieldSet& f);

/// The same quantities from their amplitude/phase expansion with the
/// interference phase theta = phi_1 + phi_c - phi_2 - phi_p.
TransitionProbabilities transition_probabilities_expanded(const FieldSet& f);

/// Weak-field coupling V (only V31 = -Omega_p, V41 = -Omega_c and conjugates).
Eigen::Matrix4cd weak_coupling(const FieldSet& f);

}  // namespace phaseswitch
