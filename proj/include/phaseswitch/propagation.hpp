// Coupled-mode propagation of the probe and control fields through the medium.
//
// d/dz (Omega_p, Omega_c)^T = m (Omega_p, Omega_c)^T with z measured in units
// of the medium length, so K13 and K14 enter as the aggregates k13_ell, k14_ell.
// The coupling fields are undepleted.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "phaseswitch/model.hpp"

namespace phaseswitch {

using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

class StepTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incident weak fields at z = 0.
struct WeakInput {
    complex probe;
    complex control;
};

/// The weak fields of a FieldSet, used as the incident pair.
WeakInput input_from_fields(const FieldSet& f);

struct EigenPair2 {
    std::array<complex, 2> values;
    std::array<Vec2, 2> vectors;  // unit norm, first nonzero component real positive
};

/// Closed-form eigen-decomposition of a 2x2 complex matrix. The quadratic is
/// solved on the non-cancelling branch and the second root recovered from det/q.
EigenPair2 eigen_decompose(const Mat2& m);

struct CoupledModeMatrix {
    Mat2 m;
    std::array<complex, 2> eigenvalues;
    std::array<Vec2, 2> eigenvectors;
};

CoupledModeMatrix coupled_mode_matrix(const SystemParams& params);

/// exp(m z) built from the eigenvalues of m. Within a relative eigenvalue gap
/// of 1e-8 the first-order degenerate limit is used.
Mat2 propagator(const CoupledModeMatrix& cm, double z);

struct TransferResult {
    Mat2 t;
    Vec2 output;
    std::optional<complex> t_probe;    // Omega_p(l) / Omega_p(0)
    std::optional<complex> t_control;  // Omega_c(l) / Omega_c(0)
    std::optional<double> transmission_p;
    std::optional<double> transmission_c;
    /// (|Omega_p(l)|^2 + |Omega_c(l)|^2) / (|Omega_p(0)|^2 + |Omega_c(0)|^2)
    double transmission_total = 0.0;
};

/// Propagates `input` through a fraction `z` of the medium (z = 1: full length).
TransferResult transfer(const SystemParams& params, const WeakInput& input, double z = 1.0);

enum class PointStatus { ok, singular, invalid, step_too_large };

const char* to_string(PointStatus status);

struct SpectrumRow {
    double delta = 0.0;
    std::optional<double> transmission_p;
    std::optional<double> transmission_c;
    PointStatus status = PointStatus::ok;
};

/// Scans Dp = Dc = delta (D1, D2 held fixed). Singular points are flagged, not dropped.
std::vector<SpectrumRow> transmission_spectrum(const SystemParams& params, const WeakInput& input,
                                               std::span<const double> grid);

struct FluorescenceRow {
    double delta = 0.0;
    double fluorescence = 0.0;
    PointStatus status = PointStatus::ok;
};

/// Fluorescence collected from the whole medium: the local scattering rate
/// integrated along z by the midpoint rule on n_slices, weighted by the mean
/// optical depth (k13_ell + k14_ell) / 2 as a column-density proxy, times `scale`.
std::vector<FluorescenceRow> fluorescence_spectrum(const SystemParams& params, const WeakInput& input,
                                                   std::span<const double> grid, double scale = 1.0);

struct GroupDelayResult {
    std::optional<double> tau_p;  // units of 1 / gamma_3
    std::optional<double> tau_c;
    double vg_formula_p = 0.0;
    double vg_formula_c = 0.0;
    bool matched = false;
};

inline constexpr double kDefaultDelayStep = 1e-4;

/// Group delays d(arg t)/d(delta) by central differences at the operating point
/// params.detunings.delta_p (Dp and Dc move together).
GroupDelayResult group_delay(const SystemParams& params, const WeakInput& input,
                             double step = kDefaultDelayStep);

/// |w_p g4 K13 - w_c g3 K14| / (w_p g4 K13 + w_c g3 K14) < 1e-6.
bool group_velocities_matched(const SystemParams& params);

}  // namespace phaseswitch
