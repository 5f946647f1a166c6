#include "phaseswitch/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "phaseswitch/coherences.hpp"

namespace phaseswitch {

namespace {

constexpr double kDegenerateGap = 1e-8;
constexpr double kMatchTolerance = 1e-6;

Vec2 canonical(Vec2 v) {
    v.normalize();
    const int lead = std::abs(v(0)) > 1e-12 ? 0 : 1;
    const complex c = v(lead);
    if (std::abs(c) > 0.0) {
        v *= std::conj(c) / std::abs(c);
        v(lead) = std::abs(v(lead));
    }
    return v;
}

Vec2 eigenvector_for(const Mat2& m, complex lambda, int index) {
    const Vec2 u(m(0, 1), lambda - m(0, 0));
    const Vec2 w(lambda - m(1, 1), m(1, 0));
    const double nu = u.norm();
    const double nw = w.norm();
    if (std::max(nu, nw) == 0.0) {
        // m is a multiple of the identity.
        return index == 0 ? Vec2(1.0, 0.0) : Vec2(0.0, 1.0);
    }
    return canonical(nu >= nw ? u : w);
}

double phase_step(complex from, complex to) { return std::arg(to / from); }

}  // namespace

WeakInput input_from_fields(const FieldSet& f) { return {f.omega_p.value(), f.omega_c.value()}; }

EigenPair2 eigen_decompose(const Mat2& m) {
    const complex tr = m.trace();
    const complex det = m.determinant();
    complex s = std::sqrt(tr * tr - 4.0 * det);
    if (std::real(std::conj(tr) * s) < 0.0) {
        s = -s;
    }
    const complex q = 0.5 * (tr + s);
    EigenPair2 e;
    e.values[0] = q;
    e.values[1] = std::abs(q) > 0.0 ? det / q : tr - q;
    e.vectors[0] = eigenvector_for(m, e.values[0], 0);
    e.vectors[1] = eigenvector_for(m, e.values[1], 1);
    return e;
}

CoupledModeMatrix coupled_mode_matrix(const SystemParams& params) {
    require_valid(params);
    const auto d = complex_detunings(params);
    const complex lam = lambda_determinant(params);
    if (!(std::abs(lam) > kSingularLambda)) {
        std::ostringstream os;
        os << "coupled_mode_matrix: |Lambda| = " << std::abs(lam) << " is singular at delta_p = "
           << params.detunings.delta_p;
        throw SingularityError(os.str());
    }
    const auto& f = params.fields;
    const complex o1 = f.omega_1.value();
    const complex o2 = f.omega_2.value();
    const double k13 = params.medium.k13_ell;
    const double k14 = params.medium.k14_ell;
    const complex i(0.0, 1.0);

    CoupledModeMatrix cm;
    cm.m(0, 0) = i * k13 * (std::norm(o2) - d.ground * d.control) / lam;
    cm.m(0, 1) = -i * k13 * o1 * std::conj(o2) / lam;
    cm.m(1, 0) = -i * k14 * std::conj(o1) * o2 / lam;
    cm.m(1, 1) = i * k14 * (std::norm(o1) - d.ground * d.probe) / lam;

    const auto e = eigen_decompose(cm.m);
    cm.eigenvalues = e.values;
    cm.eigenvectors = e.vectors;
    return cm;
}

Mat2 propagator(const CoupledModeMatrix& cm, double z) {
    const complex l1 = cm.eigenvalues[0] * z;
    const complex l2 = cm.eigenvalues[1] * z;
    const complex mean = 0.5 * (l1 + l2);
    const complex half_gap = 0.5 * (l1 - l2);
    const Mat2 shifted = cm.m * z - mean * Mat2::Identity();

    const double scale = std::max({std::abs(l1), std::abs(l2), 1e-30});
    if (std::abs(l1 - l2) < kDegenerateGap * scale) {
        return std::exp(mean) * (Mat2::Identity() + shifted);
    }
    return std::exp(mean) * (std::cosh(half_gap) * Mat2::Identity() + (std::sinh(half_gap) / half_gap) * shifted);
}

TransferResult transfer(const SystemParams& params, const WeakInput& input, double z) {
    if (input.probe == 0.0 && input.control == 0.0) {
        throw DomainError("transfer: both input fields are zero, transmission undefined");
    }
    const auto cm = coupled_mode_matrix(params);
    TransferResult r;
    r.t = propagator(cm, z);
    r.output = r.t * Vec2(input.probe, input.control);
    if (input.probe != 0.0) {
        r.t_probe = r.output(0) / input.probe;
        r.transmission_p = std::norm(*r.t_probe);
    }
    if (input.control != 0.0) {
        r.t_control = r.output(1) / input.control;
        r.transmission_c = std::norm(*r.t_control);
    }
    r.transmission_total =
        r.output.squaredNorm() / (std::norm(input.probe) + std::norm(input.control));
    return r;
}

const char* to_string(PointStatus status) {
    switch (status) {
        case PointStatus::ok: return "ok";
        case PointStatus::singular: return "singular";
        case PointStatus::invalid: return "invalid";
        case PointStatus::step_too_large: return "step_too_large";
    }
    return "unknown";
}

std::vector<SpectrumRow> transmission_spectrum(const SystemParams& params, const WeakInput& input,
                                               std::span<const double> grid) {
    if (input.probe == 0.0 && input.control == 0.0) {
        throw DomainError("transmission_spectrum: both input fields are zero");
    }
    std::vector<SpectrumRow> rows;
    rows.reserve(grid.size());
    for (const double delta : grid) {
        SpectrumRow row;
        row.delta = delta;
        try {
            const auto r = transfer(at_detuning(params, delta), input);
            row.transmission_p = r.transmission_p;
            row.transmission_c = r.transmission_c;
        } catch (const SingularityError&) {
            row.status = PointStatus::singular;
        } catch (const InvalidParameters&) {
            row.status = PointStatus::invalid;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<FluorescenceRow> fluorescence_spectrum(const SystemParams& params, const WeakInput& input,
                                                   std::span<const double> grid, double scale) {
    require_valid(params);
    const int n = params.medium.n_slices;
    const double column = 0.5 * (params.medium.k13_ell + params.medium.k14_ell);
    const Vec2 in(input.probe, input.control);

    std::vector<FluorescenceRow> rows;
    rows.reserve(grid.size());
    for (const double delta : grid) {
        FluorescenceRow row;
        row.delta = delta;
        try {
            SystemParams local = at_detuning(params, delta);
            const auto cm = coupled_mode_matrix(local);
            double sum = 0.0;
            for (int k = 0; k < n; ++k) {
                const double z = (k + 0.5) / n;
                const Vec2 fields = propagator(cm, z) * in;
                local.fields.omega_p = ComplexRabi::from_value(fields(0));
                local.fields.omega_c = ComplexRabi::from_value(fields(1));
                sum += fluorescence_density(local);
            }
            row.fluorescence = scale * column * sum / n;
        } catch (const SingularityError&) {
            row.status = PointStatus::singular;
            row.fluorescence = std::nan("");
        } catch (const InvalidParameters&) {
            row.status = PointStatus::invalid;
            row.fluorescence = std::nan("");
        }
        rows.push_back(row);
    }
    return rows;
}

bool group_velocities_matched(const SystemParams& params) {
    const double probe_side = params.decays.gamma_4 * params.medium.k13_ell;
    const double control_side = params.medium.omega_ratio * params.decays.gamma_3 * params.medium.k14_ell;
    const double total = probe_side + control_side;
    if (total == 0.0) {
        return true;
    }
    return std::abs(probe_side - control_side) / total < kMatchTolerance;
}

GroupDelayResult group_delay(const SystemParams& params, const WeakInput& input, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw DomainError("group_delay: step must be finite and > 0");
    }
    const double center = params.detunings.delta_p;
    const auto below = transfer(at_detuning(params, center - step), input);
    const auto here = transfer(at_detuning(params, center), input);
    const auto above = transfer(at_detuning(params, center + step), input);

    auto delay = [&](const std::optional<complex>& lo, const std::optional<complex>& mid,
                     const std::optional<complex>& hi) -> std::optional<double> {
        if (!lo || !mid || !hi) {
            return std::nullopt;
        }
        const double j1 = phase_step(*lo, *mid);
        const double j2 = phase_step(*mid, *hi);
        if (std::abs(j1) > 0.5 * std::numbers::pi || std::abs(j2) > 0.5 * std::numbers::pi) {
            throw StepTooLargeError("group_delay: transfer phase jumps by more than pi/2 between neighbours");
        }
        return (j1 + j2) / (2.0 * step);
    };

    GroupDelayResult g;
    g.tau_p = delay(below.t_probe, here.t_probe, above.t_probe);
    g.tau_c = delay(below.t_control, here.t_control, above.t_control);

    const auto& f = params.fields;
    const double denom = params.decays.gamma_3 * std::norm(f.omega_2.value()) +
                         params.decays.gamma_4 * std::norm(f.omega_1.value());
    g.vg_formula_p = params.decays.gamma_4 * params.medium.k13_ell / denom;
    g.vg_formula_c = params.medium.omega_ratio * params.decays.gamma_3 * params.medium.k14_ell / denom;
    g.matched = group_velocities_matched(params);
    return g;
}

}  // namespace phaseswitch
