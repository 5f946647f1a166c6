// Full density-matrix steady state of the four-level system. Serves as the
// independent reference for the closed-form weak-field results.
//
// Rotating frame, state order (|1>, |2>, |3>, |4>):
//   H = -diag(0, Dp - D1, Dp, Dc) - (Omega_p |3><1| + Omega_1 |3><2|
//       + Omega_c |4><1| + Omega_2 |4><2| + h.c.)
// With this sign choice the first-order coherences reproduce
// delta_p = Dp + i gamma_3 etc. exactly.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "phaseswitch/model.hpp"

namespace phaseswitch {

using Mat4 = Eigen::Matrix4cd;

enum class GroundRelaxation {
    to_ground_1,     // |2> -> |1> at rate 2 gamma_2
    pure_dephasing,  // |2><2| projector at rate 2 gamma_2
};

struct DecayOptions {
    /// Fraction of each excited state's total decay 2 gamma_i that lands in |1>.
    double branching_to_1 = 1.0;
    GroundRelaxation ground = GroundRelaxation::to_ground_1;

    /// Every decay returns to |1>; the weak-field populations then equal the
    /// squared first-order amplitudes.
    static DecayOptions closed_to_ground_1() { return {}; }
    /// Equal branching to |1> and |2> with pure ground dephasing.
    static DecayOptions equal_branching() { return {0.5, GroundRelaxation::pure_dephasing}; }
};

struct DecayChannel {
    double rate = 0.0;  // dissipator rate * D[jump]
    Mat4 jump;
    std::string label;
};

struct LindbladModel {
    Mat4 hamiltonian;
    std::vector<DecayChannel> channels;
};

/// Throws InvalidParameters when the multiphoton closure (or any other invariant) fails.
LindbladModel build_model(const SystemParams& params, const DecayOptions& options = {});

/// L(rho) = -i[H, rho] + sum_k rate_k (J rho J^+ - {J^+ J, rho} / 2).
Mat4 apply_liouvillian(const LindbladModel& model, const Mat4& rho);

/// Real 16x16 matrix of L acting on the Hermitian coordinates of rho.
Eigen::Matrix<double, 16, 16> liouvillian_matrix(const LindbladModel& model);

/// Hermitian basis used for the real vectorization: 4 diagonal projectors,
/// then E_ij + E_ji and i(E_ji - E_ij) for each pair i < j.
Mat4 hermitian_basis(int k);
Eigen::Matrix<double, 16, 1> hermitian_coordinates(const Mat4& h);

struct DensityMatrix {
    Mat4 rho;

    double hermiticity_error() const;
    complex trace() const { return rho.trace(); }
    double min_eigenvalue() const;
};

struct SteadyStateResult {
    DensityMatrix state;
    double residual = 0.0;           // Frobenius norm of L(rho)
    std::size_t null_dimension = 0;  // dimension of ker L
    bool unique = true;
    double condition_estimate = 0.0;
    std::vector<std::string> warnings;
};

SteadyStateResult steady_state(const LindbladModel& model);

struct WeakFieldResponse {
    double p3 = 0.0;  // rho_33
    double p4 = 0.0;  // rho_44
    complex rho31;
    complex rho41;
    std::vector<std::string> warnings;
};

WeakFieldResponse weak_field_response(const SystemParams& params, const DecayOptions& options = {});

}  // namespace phaseswitch
