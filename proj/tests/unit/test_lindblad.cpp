#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "phaseswitch/coherences.hpp"
#include "phaseswitch/experiments.hpp"
#include "phaseswitch/lindblad.hpp"

using namespace phaseswitch;
using std::numbers::pi;

namespace {

Mat4 random_hermitian(gen::Draws& d) {
    Mat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = d.value();
    return a + a.adjoint();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SystemParams weak(SystemParams p, double amplitude) {
    p.fields.omega_p = {amplitude, p.fields.omega_p.phase()};
    p.fields.omega_c = {amplitude, p.fields.omega_c.phase()};
    return p;
}

}  // namespace

TEST_CASE("Liouvillian preserves trace and Hermiticity") {
    gen::Draws d(51);
    for (int k = 0; k < 200; ++k) {
        const auto p = d.off_resonant(0.5);
        for (const auto& opt : {DecayOptions::closed_to_ground_1(), DecayOptions::equal_branching()}) {
            const auto model = build_model(p, opt);
            CHECK((model.hamiltonian - model.hamiltonian.adjoint()).norm() == 0.0);
            const Mat4 rho = random_hermitian(d);
            const Mat4 l = apply_liouvillian(model, rho);
            CHECK(std::abs(l.trace()) < 1e-12 * (1.0 + l.norm()));
            CHECK((l - l.adjoint()).norm() < 1e-12 * (1.0 + l.norm()));

            Mat4 general;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) general(i, j) = d.value();
            CHECK(std::abs(apply_liouvillian(model, general).trace()) < 1e-12 * (1.0 + general.norm()));
        }
    }
}

TEST_CASE("real vectorization reproduces the Liouvillian") {
    gen::Draws d(52);
    const auto model = build_model(d.off_resonant(0.3));
    const auto lm = liouvillian_matrix(model);
    for (int k = 0; k < 50; ++k) {
        const Mat4 h = random_hermitian(d);
        Mat4 back = Mat4::Zero();
        const auto x = hermitian_coordinates(h);
        for (int j = 0; j < 16; ++j) back += x(j) * hermitian_basis(j);
        CHECK((back - h).norm() < 1e-12 * h.norm());

        const auto y = lm * x;
        Mat4 image = Mat4::Zero();
        for (int j = 0; j < 16; ++j) image += y(j) * hermitian_basis(j);
        CHECK((image - apply_liouvillian(model, h)).norm() < 1e-12 * (1.0 + image.norm()));
    }
}

TEST_CASE("decay channels") {
    SystemParams p = preset("fig4").params;
    p.decays.gamma_4 = 1.3;
    const auto closed = build_model(p);
    double from3 = 0.0, from4 = 0.0;
    for (const auto& c : closed.channels) {
        const Mat4 jdj = c.jump.adjoint() * c.jump;
        from3 += c.rate * jdj(2, 2).real();
        from4 += c.rate * jdj(3, 3).real();
    }
    CHECK(from3 == doctest::Approx(2.0 * p.decays.gamma_3));
    CHECK(from4 == doctest::Approx(2.0 * p.decays.gamma_4));

    const auto equal = build_model(p, DecayOptions::equal_branching());
    CHECK(equal.channels.size() == 5);
    from3 = 0.0;
    for (const auto& c : equal.channels) from3 += c.rate * (c.jump.adjoint() * c.jump)(2, 2).real();
    CHECK(from3 == doctest::Approx(2.0 * p.decays.gamma_3));

    SystemParams bad = p;
    bad.detunings.delta_c = 0.1;
    CHECK_THROWS_AS(build_model(bad), InvalidParameters);
}

TEST_CASE("free coherence decays at the half-widths") {
    SystemParams p;
    p.decays = {0.05, 1.0, 1.7};
    for (const auto& opt : {DecayOptions::closed_to_ground_1(), DecayOptions::equal_branching()}) {
        const auto model = build_model(p, opt);
        Mat4 rho = Mat4::Zero();
        rho(2, 0) = 1.0;
        CHECK(apply_liouvillian(model, rho)(2, 0).real() == doctest::Approx(-1.0));
        rho.setZero();
        rho(3, 0) = 1.0;
        CHECK(apply_liouvillian(model, rho)(3, 0).real() == doctest::Approx(-1.7));
        rho.setZero();
        rho(1, 0) = 1.0;
        CHECK(apply_liouvillian(model, rho)(1, 0).real() == doctest::Approx(-0.05));
    }
}

TEST_CASE("two-level saturation") {
    gen::Draws d(53);
    for (int k = 0; k < 50; ++k) {
        SystemParams p;
        const double omega = d.uniform(0.01, 3.0);
        const double detuning = d.uniform(-3.0, 3.0);
        p.fields.omega_p = {omega, d.phase()};
        p.detunings = {detuning, 0.0, 0.0, -detuning};
        p.decays.gamma_2 = 0.01;  // empties the spectator level |2>
        p.decays.gamma_3 = d.uniform(0.5, 2.0);
        const auto r = steady_state(build_model(p));
        CHECK(r.unique);
        CHECK(r.residual < 1e-10);
        CHECK(r.state.rho(2, 2).real() ==
              doctest::Approx(oracle::two_level_excited(omega, p.decays.gamma_3, detuning)).epsilon(1e-10));
    }
}

TEST_CASE("steady state is a valid density matrix for the scenario parameters") {
    for (const auto& name : scenario_names()) {
        const auto s = preset(name);
        for (const auto& opt : {DecayOptions::closed_to_ground_1(), DecayOptions::equal_branching()}) {
            const auto r = steady_state(build_model(s.params, opt));
            CAPTURE(name);
            CHECK(r.unique);
            CHECK(r.residual < 1e-10);
            CHECK(r.state.hermiticity_error() < 1e-12);
            CHECK(std::abs(r.state.trace() - 1.0) < 1e-12);
            CHECK(r.state.min_eigenvalue() >= -1e-10);
        }
    }
}

TEST_CASE("dark state") {
    auto p = preset("fig2b").params;
    p.decays.gamma_2 = 0.0;
    p = weak(p, 1e-3);
    for (const auto& opt : {DecayOptions::closed_to_ground_1(), DecayOptions::equal_branching()}) {
        const auto w = weak_field_response(p, opt);
        CHECK(w.p3 <= 1e-10);
        CHECK(w.p4 <= 1e-10);
    }
}

TEST_CASE("weak drive matches the closed forms") {
    gen::Draws d(54);
    for (int k = 0; k < 60; ++k) {
        const auto p = k % 2 ? d.off_resonant(1e-3) : d.resonant(1e-3);
        const auto s = steady_coherences(p);
        const auto w = weak_field_response(p);
        CHECK(w.warnings.empty());
        CHECK(rel(w.p3, s.p3) < 1e-2);
        CHECK(rel(w.p4, s.p4) < 1e-2);

        // d Omega / dz reconstructed from the optical coherences.
        const auto cm = coupled_mode_matrix(p);
        Vec2 in;
        in << p.fields.omega_p.value(), p.fields.omega_c.value();
        const Vec2 rate = cm.m * in;
        const complex i{0.0, 1.0};
        CHECK(std::abs(i * p.medium.k13_ell * w.rho31 - rate(0)) < 1e-2 * std::abs(rate(0)));
        CHECK(std::abs(i * p.medium.k14_ell * w.rho41 - rate(1)) < 1e-2 * std::abs(rate(1)));
    }

    auto fig4 = weak(preset("fig4").params, 1e-3);
    fig4.fields.omega_c = {0.0, 0.0};
    CHECK(rel(weak_field_response(fig4).p3, steady_coherences(fig4).p3) < 1e-2);

    auto off = weak(preset("fig4").params, 1e-3);
    off = at_detuning(off, 2.0);
    CHECK(rel(weak_field_response(off).p3, steady_coherences(off).p3) < 1e-2);
}

TEST_CASE("equal branching keeps the optical coherences") {
    gen::Draws d(55);
    for (int k = 0; k < 30; ++k) {
        const auto p = d.off_resonant(1e-3);
        const auto s = steady_coherences(p);
        const auto w = weak_field_response(p, DecayOptions::equal_branching());
        CHECK(std::abs(w.rho31 - s.a3) < 1e-2 * std::abs(s.a3));
        CHECK(std::abs(w.rho41 - s.a4) < 1e-2 * std::abs(s.a4));
    }
}

TEST_CASE("linear response scaling") {
    const auto p = weak(preset("fig4").params, 2e-3);
    const auto q = weak(preset("fig4").params, 1e-3);
    const auto a = weak_field_response(p);
    const auto b = weak_field_response(q);
    CHECK(rel(b.p3, a.p3 / 4.0) < 5e-3);
    CHECK(rel(b.p4, a.p4 / 4.0) < 5e-3);

    const auto strong = weak_field_response(weak(preset("fig4").params, 0.1));
    CHECK_FALSE(strong.warnings.empty());
}

TEST_CASE("free atom without ground relaxation is flagged non-unique") {
    SystemParams p;
    const auto r = steady_state(build_model(p));
    CHECK_FALSE(r.unique);
    CHECK(r.null_dimension >= 2);
    CHECK(std::abs(r.state.trace() - 1.0) < 1e-12);

    p.decays.gamma_2 = 0.01;
    CHECK(steady_state(build_model(p)).unique);
}
