#include "phaseswitch/runner.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "phaseswitch/coherences.hpp"
#include "phaseswitch/dressed.hpp"
#include "phaseswitch/experiments.hpp"
#include "phaseswitch/lindblad.hpp"
#include "phaseswitch/propagation.hpp"

namespace phaseswitch {

namespace {

struct Units {
    UnitMode mode;

    double frequency(double g) const { return mode == UnitMode::mhz ? gamma3_to_mhz(g) : g; }
    // 1/gamma_3 -> microseconds in MHz mode.
    double time(double t) const {
        return mode == UnitMode::mhz ? t / (2.0 * std::numbers::pi * kGamma3MHz) : t;
    }
    std::string frequency_label() const { return mode == UnitMode::mhz ? "MHz" : "gamma_3"; }
    std::string time_label() const { return mode == UnitMode::mhz ? "us" : "1/gamma_3"; }
};

std::string kv(const std::string& key, double v) { return key + " = " + format_number(v); }

double nan_or(const std::optional<double>& v) { return v.value_or(std::nan("")); }

RunOutput spectrum(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"delta", "transmission_p", "transmission_c", "flag"};
    const auto grid = c.grid.points();
    const auto rows = transmission_spectrum(c.params, c.input(), grid);
    Series sp{"probe", {}, {}}, sc{"control", {}, {}};
    for (const auto& r : rows) {
        out.table.add_row({format_number(u.frequency(r.delta)), format_number(r.transmission_p),
                           format_number(r.transmission_c), to_string(r.status)});
        sp.x.push_back(u.frequency(r.delta));
        sp.y.push_back(nan_or(r.transmission_p));
        sc.x.push_back(u.frequency(r.delta));
        sc.y.push_back(nan_or(r.transmission_c));
    }
    out.plot = PlotSpec{"Transmission spectrum", "delta [" + u.frequency_label() + "]", "transmission", {sp, sc}};
    return out;
}

RunOutput fluorescence(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"delta", "fluorescence", "flag"};
    const auto grid = c.grid.points();
    Series s{"fluorescence", {}, {}};
    for (const auto& r : fluorescence_spectrum(c.params, c.input(), grid, c.fluorescence_scale)) {
        out.table.add_row({format_number(u.frequency(r.delta)), format_number(r.fluorescence), to_string(r.status)});
        s.x.push_back(u.frequency(r.delta));
        s.y.push_back(r.fluorescence);
    }
    out.plot = PlotSpec{"Fluorescence", "delta [" + u.frequency_label() + "]", "fluorescence [arb.]", {s}};
    return out;
}

RunOutput switching(const RunConfig& c, const Units& u) {
    if (!c.waveform) {
        throw DomainError("switch: no waveform configured (use a fig5 scenario or a [waveform] section)");
    }
    RunOutput out;
    out.table.header = {"t_over_T", "phi_c", "transmission_total", "flag"};
    const auto samples = switch_waveform(c.params, *c.waveform, c.delta, c.input());
    Series total{"total transmission", {}, {}}, phase{"phi_c / pi", {}, {}};
    for (const auto& s : samples) {
        out.table.add_row({format_number(s.t_over_t), format_number(s.point.phi_c),
                           format_number(s.point.transmission_total), to_string(s.point.status)});
        total.x.push_back(s.t_over_t);
        total.y.push_back(s.point.transmission_total);
        phase.x.push_back(s.t_over_t);
        phase.y.push_back(s.point.phi_c / std::numbers::pi);
    }
    const auto m = efficiency_from_waveform(samples);
    out.summary = {kv("delta", u.frequency(c.delta)), kv("i_in", m.i_in), kv("i_close", m.i_close),
                   kv("i_open", m.i_open), kv("eta", m.eta)};
    for (const auto& n : m.notes) out.summary.push_back("note = " + n);
    out.plot = PlotSpec{"Phase switching", "t / T", "normalized intensity", {total, phase}};
    return out;
}

RunOutput phasescan(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"phi_c", "transmission_p", "transmission_c", "transmission_total", "flag"};
    const auto phases = phase_grid(c.phase_steps);
    const auto scan = phase_scan(c.params, c.delta, c.input(), phases);
    Series tp{"probe", {}, {}}, tc{"control", {}, {}}, tt{"total", {}, {}};
    for (const auto& r : scan.rows) {
        out.table.add_row({format_number(r.phi_c), format_number(r.transmission_p), format_number(r.transmission_c),
                           format_number(r.transmission_total), to_string(r.status)});
        for (auto* s : {&tp, &tc, &tt}) s->x.push_back(r.phi_c);
        tp.y.push_back(nan_or(r.transmission_p));
        tc.y.push_back(nan_or(r.transmission_c));
        tt.y.push_back(r.transmission_total);
    }
    out.summary = {kv("delta", u.frequency(c.delta)), kv("argmax_phi_c", scan.argmax),
                   kv("argmin_phi_c", scan.argmin)};
    out.plot = PlotSpec{"Transmission versus control phase", "phi_c [rad]", "transmission", {tp, tc, tt}};
    return out;
}

RunOutput populations(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"delta", "p3", "p4", "flag"};
    Series s3{"P3", {}, {}}, s4{"P4", {}, {}};
    for (const double d : c.grid.points()) {
        double p3 = std::nan(""), p4 = std::nan("");
        PointStatus status = PointStatus::ok;
        try {
            const auto s = steady_coherences(at_detuning(c.params, d));
            p3 = s.p3;
            p4 = s.p4;
        } catch (const SingularityError&) {
            status = PointStatus::singular;
        }
        out.table.add_row({format_number(u.frequency(d)), format_number(p3), format_number(p4), to_string(status)});
        s3.x.push_back(u.frequency(d));
        s3.y.push_back(p3);
        s4.x.push_back(u.frequency(d));
        s4.y.push_back(p4);
    }
    out.plot = PlotSpec{"Excited-state populations", "delta [" + u.frequency_label() + "]", "population", {s3, s4}};
    return out;
}

RunOutput groupdelay(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"delta", "tau_p", "tau_c", "flag"};
    Series sp{"tau_p", {}, {}}, sc{"tau_c", {}, {}};
    for (const double d : c.grid.points()) {
        std::optional<double> tp, tc;
        PointStatus status = PointStatus::ok;
        try {
            const auto g = group_delay(at_detuning(c.params, d), c.input(), c.delay_step);
            if (g.tau_p) tp = u.time(*g.tau_p);
            if (g.tau_c) tc = u.time(*g.tau_c);
        } catch (const SingularityError&) {
            status = PointStatus::singular;
        } catch (const StepTooLargeError&) {
            status = PointStatus::step_too_large;
        }
        out.table.add_row({format_number(u.frequency(d)), format_number(tp), format_number(tc), to_string(status)});
        sp.x.push_back(u.frequency(d));
        sp.y.push_back(nan_or(tp));
        sc.x.push_back(u.frequency(d));
        sc.y.push_back(nan_or(tc));
    }
    const auto g = group_delay(at_detuning(c.params, c.delta), c.input(), c.delay_step);
    out.summary = {kv("delta", u.frequency(c.delta)), kv("tau_p", u.time(nan_or(g.tau_p))),
                   kv("tau_c", u.time(nan_or(g.tau_c))), kv("vg_formula_p", g.vg_formula_p),
                   kv("vg_formula_c", g.vg_formula_c), std::string("matched = ") + (g.matched ? "true" : "false")};
    out.plot = PlotSpec{"Group delay", "delta [" + u.frequency_label() + "]", "delay [" + u.time_label() + "]",
                        {sp, sc}};
    return out;
}

RunOutput dressed(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"state", "shift", "c1_re", "c1_im", "c2_re", "c2_im",
                        "c3_re", "c3_im", "c4_re", "c4_im", "transition_weight"};
    const auto& f = c.params.fields;
    const auto basis = dressed_basis(f.omega_1, f.omega_2);
    const auto v = weak_coupling(f);
    const std::pair<const char*, const Vec4*> states[] = {{"plus", &basis.plus}, {"zero", &basis.zero},
                                                          {"minus", &basis.minus}};
    for (std::size_t k = 0; k < 3; ++k) {
        const Vec4& d = *states[k].second;
        const complex element = d.dot(v.col(0));  // <d|V|1>
        std::vector<std::string> row{states[k].first, format_number(u.frequency(basis.shifts[k]))};
        for (int i = 0; i < 4; ++i) {
            row.push_back(format_number(d(i).real()));
            row.push_back(format_number(d(i).imag()));
        }
        row.push_back(format_number(std::norm(element)));
        out.table.add_row(std::move(row));
    }
    const auto p = transition_probabilities(f);
    out.summary = {kv("p_pm", p.p_pm), kv("p_0", p.p_0)};
    const auto ic = interference_condition(f);
    out.summary.push_back(std::string("interference = ") + to_string(ic.kind));
    return out;
}

RunOutput steady(const RunConfig& c, const Units& u) {
    RunOutput out;
    out.table.header = {"quantity", "oracle", "closed_form", "relative_difference"};
    const auto params = at_detuning(c.params, c.delta);
    const auto ss = steady_state(build_model(params));
    const auto cf = steady_coherences(params);
    const Mat4& rho = ss.state.rho;

    auto add = [&](const char* name, double oracle, std::optional<double> closed) {
        std::optional<double> rel;
        if (closed && *closed != 0.0) rel = std::abs(oracle - *closed) / std::abs(*closed);
        out.table.add_row({name, format_number(oracle), format_number(closed), format_number(rel)});
    };
    add("rho_11", rho(0, 0).real(), std::nullopt);
    add("rho_22", rho(1, 1).real(), std::nullopt);
    add("rho_33", rho(2, 2).real(), cf.p3);
    add("rho_44", rho(3, 3).real(), cf.p4);
    add("re_rho_31", rho(2, 0).real(), cf.a3.real());
    add("im_rho_31", rho(2, 0).imag(), cf.a3.imag());
    add("re_rho_41", rho(3, 0).real(), cf.a4.real());
    add("im_rho_41", rho(3, 0).imag(), cf.a4.imag());

    out.summary = {kv("delta", u.frequency(c.delta)), kv("residual", ss.residual),
                   kv("condition_estimate", ss.condition_estimate), kv("min_eigenvalue", ss.state.min_eigenvalue()),
                   std::string("unique = ") + (ss.unique ? "true" : "false")};
    for (const auto& w : ss.warnings) out.summary.push_back("warning = " + w);
    return out;
}

RunOutput validation(const RunConfig& c) {
    RunOutput out;
    out.table.header = {"kind", "message"};
    const auto report = validate(c.params);
    for (const auto& v : report.violations) out.table.add_row({"violation", v});
    for (const auto& w : report.warnings) out.table.add_row({"warning", w});
    out.summary = {std::string("valid = ") + (report.ok() ? "true" : "false")};
    out.exit_code = report.ok() ? 0 : 1;
    return out;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names{"spectrum", "fluorescence", "switch", "phasescan", "populations",
                                                "dressed", "steady", "groupdelay", "validate"};
    return names;
}

Subcommand parse_subcommand(std::string_view name) {
    static const Subcommand order[] = {Subcommand::spectrum, Subcommand::fluorescence, Subcommand::switching,
                                       Subcommand::phasescan, Subcommand::populations, Subcommand::dressed,
                                       Subcommand::steady, Subcommand::groupdelay, Subcommand::validate};
    const auto& names = subcommand_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return order[i];
    }
    throw std::invalid_argument("unknown subcommand: " + std::string(name));
}

RunOutput execute(Subcommand command, const RunConfig& config) {
    const Units u{config.units};
    switch (command) {
        case Subcommand::spectrum: return spectrum(config, u);
        case Subcommand::fluorescence: return fluorescence(config, u);
        case Subcommand::switching: return switching(config, u);
        case Subcommand::phasescan: return phasescan(config, u);
        case Subcommand::populations: return populations(config, u);
        case Subcommand::dressed: return dressed(config, u);
        case Subcommand::steady: return steady(config, u);
        case Subcommand::groupdelay: return groupdelay(config, u);
        case Subcommand::validate: return validation(config);
    }
    throw std::logic_error("unhandled subcommand");
}

int run(Subcommand command, const RunConfig& config, std::ostream& out, std::ostream& log) {
    for (const auto& w : config.warnings) log << "warning: " << w << '\n';
    const auto result = execute(command, config);

    if (config.csv_path) {
        std::ofstream f(*config.csv_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + *config.csv_path + " for writing");
        write_csv(f, result.table);
        if (!f) throw std::runtime_error("failed writing " + *config.csv_path);
    } else {
        write_csv(out, result.table);
    }

    if (config.svg_path) {
        if (!result.plot) {
            log << "warning: this subcommand has no plot, --svg ignored\n";
        } else {
            std::ofstream f(*config.svg_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + *config.svg_path + " for writing");
            f << render_svg(*result.plot);
            if (!f) throw std::runtime_error("failed writing " + *config.svg_path);
        }
    }

    std::ostream& summary = config.csv_path ? out : log;
    for (const auto& line : result.summary) summary << line << '\n';
    return result.exit_code;
}

}  // namespace phaseswitch
