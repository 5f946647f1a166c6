#include "phaseswitch/coherences.hpp"

#include <cmath>
#include <sstream>

namespace phaseswitch {

namespace {

constexpr double kInterferenceTolerance = 1e-9;

complex lambda_from(const ComplexDetunings& d, const FieldSet& f) {
    const double o1sq = std::norm(f.omega_1.value());
    const double o2sq = std::norm(f.omega_2.value());
    return d.ground * d.control * d.probe - d.probe * o2sq - d.control * o1sq;
}

}  // namespace

ComplexDetunings complex_detunings(const SystemParams& params) {
    const auto& d = params.detunings;
    const auto& g = params.decays;
    return {
        complex(d.delta_p, g.gamma_3),
        complex(d.delta_p - d.delta_1, g.gamma_2),
        complex(d.delta_c, g.gamma_4),
    };
}

complex lambda_determinant(const SystemParams& params) {
    return lambda_from(complex_detunings(params), params.fields);
}

SteadyCoherences steady_coherences(const SystemParams& params) {
    require_valid(params);
    const auto d = complex_detunings(params);
    const auto& f = params.fields;
    const complex lam = lambda_from(d, f);
    if (!(std::abs(lam) > kSingularLambda)) {
        std::ostringstream os;
        os << "steady_coherences: |Lambda| = " << std::abs(lam) << " is singular at delta_p = "
           << params.detunings.delta_p << ", delta_1 = " << params.detunings.delta_1
           << ", |omega_1| = " << f.omega_1.amplitude() << ", |omega_2| = " << f.omega_2.amplitude()
           << ", gamma_2 = " << params.decays.gamma_2;
        throw SingularityError(os.str());
    }

    const complex op = f.omega_p.value();
    const complex oc = f.omega_c.value();
    const complex o1 = f.omega_1.value();
    const complex o2 = f.omega_2.value();
    const double o1sq = std::norm(o1);
    const double o2sq = std::norm(o2);

    SteadyCoherences s;
    s.lambda_det = lam;
    s.a2 = (std::conj(o1) * op * d.control + std::conj(o2) * oc * d.probe) / lam;
    s.a3 = -(op * (d.ground * d.control - o2sq) + o1 * std::conj(o2) * oc) / lam;
    s.a4 = -(oc * (d.ground * d.probe - o1sq) + o2 * std::conj(o1) * op) / lam;
    s.p3 = std::norm(s.a3);
    s.p4 = std::norm(s.a4);
    return s;
}

const char* to_string(Interference kind) {
    switch (kind) {
        case Interference::destructive: return "destructive";
        case Interference::constructive: return "constructive";
        case Interference::intermediate: return "intermediate";
    }
    return "unknown";
}

InterferenceResult interference_condition(const FieldSet& f) {
    if (f.omega_1.amplitude() <= 0.0 || f.omega_2.amplitude() <= 0.0) {
        throw DomainError("interference_condition: coupling amplitudes must be > 0");
    }
    const complex three_photon = f.omega_1.value() * f.omega_c.value();
    const complex one_photon = f.omega_2.value() * f.omega_p.value();
    const double scale = std::abs(three_photon) + std::abs(one_photon);

    InterferenceResult r;
    if (scale <= 0.0) {
        r.residual = 0.0;
        r.kind = Interference::destructive;
        return r;
    }
    r.residual = (three_photon - one_photon) / scale;
    if (std::abs(r.residual) < kInterferenceTolerance) {
        r.kind = Interference::destructive;
    } else if (std::abs(three_photon + one_photon) / scale < kInterferenceTolerance) {
        r.kind = Interference::constructive;
    } else {
        r.kind = Interference::intermediate;
    }
    return r;
}

double fluorescence_density(const SystemParams& params) {
    const auto s = steady_coherences(params);
    return 2.0 * params.decays.gamma_3 * s.p3 + 2.0 * params.decays.gamma_4 * s.p4;
}

}  // namespace phaseswitch
