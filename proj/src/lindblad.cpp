#include "phaseswitch/lindblad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

namespace phaseswitch {

namespace {

using Mat16 = Eigen::Matrix<double, 16, 16>;
using Vec16 = Eigen::Matrix<double, 16, 1>;

constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr double kNullTolerance = 1e-12;
constexpr double kIllConditioned = 1e12;

Mat4 projector(int to, int from) {
    Mat4 m = Mat4::Zero();
    m(to, from) = 1.0;
    return m;
}

}  // namespace

LindbladModel build_model(const SystemParams& params, const DecayOptions& options) {
    if (std::abs(params.detunings.closure_residual()) >= kClosureTolerance) {
        throw InvalidParameters("build_model: multiphoton closure violated, no time-independent frame");
    }
    require_valid(params);
    if (!(options.branching_to_1 >= 0.0 && options.branching_to_1 <= 1.0)) {
        throw InvalidParameters("build_model: branching_to_1 must lie in [0, 1]");
    }

    const auto& d = params.detunings;
    const auto& f = params.fields;
    LindbladModel model;
    Mat4& h = model.hamiltonian;
    h = Mat4::Zero();
    h(1, 1) = -(d.delta_p - d.delta_1);
    h(2, 2) = -d.delta_p;
    h(3, 3) = -d.delta_c;
    h(2, 0) = -f.omega_p.value();
    h(2, 1) = -f.omega_1.value();
    h(3, 0) = -f.omega_c.value();
    h(3, 1) = -f.omega_2.value();
    for (const auto& [r, c] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 0}, std::pair{3, 1}}) {
        h(c, r) = std::conj(h(r, c));
    }

    const auto& g = params.decays;
    const double b = options.branching_to_1;
    auto add = [&](double rate, Mat4 jump, std::string label) {
        if (rate > 0.0) {
            model.channels.push_back({rate, std::move(jump), std::move(label)});
        }
    };
    add(2.0 * g.gamma_3 * b, projector(0, 2), "3->1");
    add(2.0 * g.gamma_3 * (1.0 - b), projector(1, 2), "3->2");
    add(2.0 * g.gamma_4 * b, projector(0, 3), "4->1");
    add(2.0 * g.gamma_4 * (1.0 - b), projector(1, 3), "4->2");
    if (options.ground == GroundRelaxation::to_ground_1) {
        add(2.0 * g.gamma_2, projector(0, 1), "2->1");
    } else {
        add(2.0 * g.gamma_2, projector(1, 1), "dephase 2");
    }
    return model;
}

Mat4 apply_liouvillian(const LindbladModel& model, const Mat4& rho) {
    const complex i(0.0, 1.0);
    Mat4 out = -i * (model.hamiltonian * rho - rho * model.hamiltonian);
    for (const auto& ch : model.channels) {
        const Mat4 jd = ch.jump.adjoint();
        const Mat4 jdj = jd * ch.jump;
        out += ch.rate * (ch.jump * rho * jd - 0.5 * (jdj * rho + rho * jdj));
    }
    return out;
}

Mat4 hermitian_basis(int k) {
    Mat4 b = Mat4::Zero();
    if (k < 4) {
        b(k, k) = 1.0;
        return b;
    }
    const auto [i, j] = kPairs[static_cast<std::size_t>((k - 4) / 2)];
    if ((k - 4) % 2 == 0) {
        b(i, j) = 1.0;
        b(j, i) = 1.0;
    } else {
        b(i, j) = complex(0.0, -1.0);
        b(j, i) = complex(0.0, 1.0);
    }
    return b;
}

Vec16 hermitian_coordinates(const Mat4& h) {
    Vec16 x;
    for (int k = 0; k < 4; ++k) {
        x(k) = h(k, k).real();
    }
    for (std::size_t p = 0; p < kPairs.size(); ++p) {
        const auto [i, j] = kPairs[p];
        x(4 + 2 * static_cast<int>(p)) = h(i, j).real();
        x(5 + 2 * static_cast<int>(p)) = -h(i, j).imag();
    }
    return x;
}

Mat16 liouvillian_matrix(const LindbladModel& model) {
    Mat16 m;
    for (int k = 0; k < 16; ++k) {
        m.col(k) = hermitian_coordinates(apply_liouvillian(model, hermitian_basis(k)));
    }
    return m;
}

double DensityMatrix::hermiticity_error() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
    const Mat4 h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

SteadyStateResult steady_state(const LindbladModel& model) {
    const Mat16 m = liouvillian_matrix(model);

    SteadyStateResult result;
    Eigen::JacobiSVD<Mat16> kernel_svd(m);
    const auto& sv = kernel_svd.singularValues();
    const double smax = sv(0);
    result.null_dimension = static_cast<std::size_t>(
        std::count_if(sv.data(), sv.data() + sv.size(), [&](double s) { return s <= kNullTolerance * smax; }));
    result.unique = result.null_dimension <= 1;
    if (!result.unique) {
        result.warnings.push_back("steady state is not unique (kernel dimension " +
                                  std::to_string(result.null_dimension) + "); returning minimum-norm solution");
    }

    // The diagonal rows of m sum to zero (trace preservation), so row 0 can
    // carry the normalization trace(rho) = 1 instead.
    Mat16 a = m;
    a.row(0).setZero();
    a.row(0).head<4>().setOnes();
    Vec16 rhs = Vec16::Zero();
    rhs(0) = 1.0;

    Eigen::JacobiSVD<Mat16> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& asv = solver.singularValues();
    result.condition_estimate = asv(15) > 0.0 ? asv(0) / asv(15) : std::numeric_limits<double>::infinity();
    if (result.condition_estimate > kIllConditioned) {
        result.warnings.push_back("Liouvillian is ill-conditioned (condition estimate " +
                                  std::to_string(result.condition_estimate) + ")");
    }
    solver.setThreshold(kNullTolerance);
    const Vec16 x = solver.solve(rhs);

    Mat4 rho = Mat4::Zero();
    for (int k = 0; k < 16; ++k) {
        rho += x(k) * hermitian_basis(k);
    }
    result.state.rho = rho;
    result.residual = apply_liouvillian(model, rho).norm();
    return result;
}

WeakFieldResponse weak_field_response(const SystemParams& params, const DecayOptions& options) {
    const auto ss = steady_state(build_model(params, options));
    WeakFieldResponse r;
    r.warnings = ss.warnings;
    if (params.fields.omega_p.amplitude() > 1e-2 || params.fields.omega_c.amplitude() > 1e-2) {
        r.warnings.push_back("weak fields above 1e-2 gamma_3: linear response may not hold");
    }
    const Mat4& rho = ss.state.rho;
    r.p3 = rho(2, 2).real();
    r.p4 = rho(3, 3).real();
    r.rho31 = rho(2, 0);
    r.rho41 = rho(3, 0);
    return r;
}

}  // namespace phaseswitch
