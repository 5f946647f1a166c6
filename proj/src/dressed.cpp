#include "phaseswitch/dressed.hpp"

#include <cmath>

namespace phaseswitch {

DressedBasis dressed_basis(const ComplexRabi& omega_1, const ComplexRabi& omega_2) {
    const double omega = std::hypot(omega_1.amplitude(), omega_2.amplitude());
    if (!(omega > 0.0)) {
        throw DomainError("dressed_basis: both coupling fields are zero");
    }
    const complex r1 = omega_1.value() / omega;
    const complex r2 = omega_2.value() / omega;
    const double h = 1.0 / std::sqrt(2.0);

    DressedBasis b;
    b.plus = Vec4(0.0, h, -h * r1, -h * r2);
    b.minus = Vec4(0.0, h, h * r1, h * r2);
    b.zero = Vec4(0.0, 0.0, std::conj(r2), -std::conj(r1));
    b.shifts = {omega, 0.0, -omega};
    return b;
}

TransitionProbabilities transition_probabilities(const FieldSet& f) {
    const complex op = f.omega_p.value();
    const complex oc = f.omega_c.value();
    const complex o1 = f.omega_1.value();
    const complex o2 = f.omega_2.value();
    return {std::norm(std::conj(o1) * op + std::conj(o2) * oc), std::norm(o2 * op - o1 * oc)};
}

TransitionProbabilities transition_probabilities_expanded(const FieldSet& f) {
    const double ap = f.omega_p.amplitude();
    const double ac = f.omega_c.amplitude();
    const double a1 = f.omega_1.amplitude();
    const double a2 = f.omega_2.amplitude();
    const double theta = f.omega_1.phase() + f.omega_c.phase() - f.omega_2.phase() - f.omega_p.phase();
    const double cross = 2.0 * ap * a1 * ac * a2 * std::cos(theta);
    return {ap * ap * a1 * a1 + ac * ac * a2 * a2 + cross, ap * ap * a2 * a2 + ac * ac * a1 * a1 - cross};
}

Eigen::Matrix4cd weak_coupling(const FieldSet& f) {
    Eigen::Matrix4cd v = Eigen::Matrix4cd::Zero();
    v(2, 0) = -f.omega_p.value();
    v(3, 0) = -f.omega_c.value();
    v(0, 2) = std::conj(v(2, 0));
    v(0, 3) = std::conj(v(3, 0));
    return v;
}

}  // namespace phaseswitch
