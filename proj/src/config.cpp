#include "phaseswitch/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace phaseswitch {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(std::string_view text, const std::string& key, int line) {
    const auto t = trim(text);
    double v = 0.0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError("key '" + key + "': expected a number, got '" + std::string(t) + "'", line);
    }
    return v;
}

int parse_int(std::string_view text, const std::string& key, int line) {
    const auto t = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + std::string(t) + "'", line);
    }
    return v;
}

// Number, or [-][N[*]]pi[/M].
double parse_angle(std::string_view text, const std::string& key, int line) {
    auto t = trim(text);
    const auto pos = t.find("pi");
    if (pos == std::string_view::npos) {
        return parse_number(t, key, line);
    }
    double sign = 1.0;
    auto head = t.substr(0, pos);
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
        sign = head.front() == '-' ? -1.0 : 1.0;
        head.remove_prefix(1);
    }
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    const double coeff = head.empty() ? 1.0 : parse_number(head, key, line);
    auto tail = t.substr(pos + 2);
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw ConfigError("key '" + key + "': malformed angle '" + std::string(t) + "'", line);
        }
        divisor = parse_number(tail.substr(1), key, line);
    }
    return sign * coeff * std::numbers::pi / divisor;
}

std::string format_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class EntryTable {
public:
    EntryTable(std::map<std::string, Entry> entries, UnitMode units)
        : entries_(std::move(entries)), units_(units) {}

    const Entry* find(const std::string& key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        used_.insert(key);
        return &it->second;
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::optional<double> number(const std::string& key) {
        const auto* e = find(key);
        if (!e) return std::nullopt;
        return parse_number(e->value, key, e->line);
    }

    std::optional<int> integer(const std::string& key) {
        const auto* e = find(key);
        if (!e) return std::nullopt;
        return parse_int(e->value, key, e->line);
    }

    std::optional<double> angle(const std::string& key) {
        const auto* e = find(key);
        if (!e) return std::nullopt;
        return parse_angle(e->value, key, e->line);
    }

    /// Rate-valued key in gamma_3 units: `key` in the active unit mode or `key_mhz`.
    std::optional<double> rate(const std::string& key) {
        const auto* plain = find(key);
        const auto* mhz = find(key + "_mhz");
        if (plain && mhz) {
            throw ConfigError("both '" + key + "' and '" + key + "_mhz' given", mhz->line);
        }
        if (mhz) return mhz_to_gamma3(parse_number(mhz->value, key + "_mhz", mhz->line));
        if (plain) {
            const double v = parse_number(plain->value, key, plain->line);
            return units_ == UnitMode::mhz ? mhz_to_gamma3(v) : v;
        }
        return std::nullopt;
    }

    std::vector<std::pair<std::string, int>> unused() const {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& [k, e] : entries_) {
            if (!used_.count(k)) out.emplace_back(k, e.line);
        }
        return out;
    }

private:
    std::map<std::string, Entry> entries_;
    std::set<std::string> used_;
    UnitMode units_;
};

std::map<std::string, Entry> tokenize(std::string_view text) {
    std::map<std::string, Entry> entries;
    std::string section;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const auto comment = line.find_first_of("#;");
        if (comment != std::string_view::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError("malformed section header '" + std::string(line) + "'", line_no);
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value', got '" + std::string(line) + "'", line_no);
        }
        const auto key = std::string(trim(line.substr(0, eq)));
        const auto value = std::string(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("empty key", line_no);
        }
        const auto qualified = section.empty() ? key : section + "." + key;
        if (entries.count(qualified)) {
            throw ConfigError("duplicate key '" + qualified + "'", line_no);
        }
        entries.emplace(qualified, Entry{value, line_no});
    }
    return entries;
}

void apply_field(EntryTable& t, const std::string& name, ComplexRabi& field) {
    const auto amp = t.rate("fields." + name);
    const auto phase = t.angle("fields." + name + "_phase");
    try {
        field = ComplexRabi(amp.value_or(field.amplitude()), phase.value_or(field.phase()));
    } catch (const DomainError& e) {
        throw ConfigError("fields." + name + ": " + e.what());
    }
}

}  // namespace

const char* to_string(UnitMode mode) { return mode == UnitMode::mhz ? "mhz" : "gamma3"; }

UnitMode parse_unit_mode(std::string_view text) {
    const auto t = trim(text);
    if (t == "gamma3") return UnitMode::gamma3;
    if (t == "mhz" || t == "MHz") return UnitMode::mhz;
    throw ConfigError("unknown unit mode '" + std::string(t) + "' (expected gamma3 or mhz)");
}

ConfigError::ConfigError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

RunConfig config_from_scenario(const Scenario& scenario) {
    RunConfig c;
    c.scenario = scenario.name;
    c.params = scenario.params;
    c.grid = scenario.grid;
    c.delta = scenario.delta;
    c.waveform = scenario.waveform;
    c.fluorescence_scale = scenario.fluorescence_scale;
    return c;
}

RunConfig parse_config(std::string_view text, const ParseOptions& options) {
    auto raw = tokenize(text);

    UnitMode units = UnitMode::gamma3;
    if (options.units) {
        units = *options.units;
    } else if (const auto it = raw.find("units"); it != raw.end()) {
        try {
            units = parse_unit_mode(it->second.value);
        } catch (const ConfigError& e) {
            throw ConfigError(e.what(), it->second.line);
        }
    }
    EntryTable t(std::move(raw), units);
    t.find("units");

    std::optional<std::string> scenario = options.scenario;
    if (const auto* e = t.find("scenario"); e && !scenario) {
        scenario = e->value;
    }

    RunConfig c;
    if (scenario) {
        try {
            c = config_from_scenario(preset(*scenario));
        } catch (const std::out_of_range& e) {
            throw ConfigError(e.what());
        }
    } else {
        for (const char* key : {"fields.omega_1", "fields.omega_2", "fields.omega_p", "decays.gamma_2",
                                "medium.k13_ell", "medium.k14_ell"}) {
            const std::string k(key);
            if (!t.has(k) && !t.has(k + "_mhz")) {
                throw ConfigError("missing required key '" + k + "'");
            }
        }
    }
    c.units = units;

    auto& p = c.params;
    apply_field(t, "omega_p", p.fields.omega_p);
    apply_field(t, "omega_c", p.fields.omega_c);
    apply_field(t, "omega_1", p.fields.omega_1);
    apply_field(t, "omega_2", p.fields.omega_2);

    if (auto v = t.rate("detunings.delta_p")) p.detunings.delta_p = *v;
    if (auto v = t.rate("detunings.delta_1")) p.detunings.delta_1 = *v;
    if (auto v = t.rate("detunings.delta_c")) p.detunings.delta_c = *v;
    if (auto v = t.rate("detunings.delta_2")) p.detunings.delta_2 = *v;

    if (auto v = t.rate("decays.gamma_2")) p.decays.gamma_2 = *v;
    if (auto v = t.rate("decays.gamma_3")) p.decays.gamma_3 = *v;
    if (auto v = t.rate("decays.gamma_4")) p.decays.gamma_4 = *v;

    if (auto v = t.number("medium.k13_ell")) p.medium.k13_ell = *v;
    if (auto v = t.number("medium.k14_ell")) p.medium.k14_ell = *v;
    if (auto v = t.integer("medium.n_slices")) p.medium.n_slices = *v;
    if (auto v = t.number("medium.omega_ratio")) p.medium.omega_ratio = *v;

    if (auto v = t.rate("grid.start")) c.grid.start = *v;
    if (auto v = t.rate("grid.stop")) c.grid.stop = *v;
    if (auto v = t.rate("grid.step")) c.grid.step = *v;

    if (const auto* e = t.find("run.delta")) {
        const auto v = trim(e->value);
        if (v == "omega" || v == "+omega") {
            c.delta = coupling_strength(p.fields);
        } else if (v == "-omega") {
            c.delta = -coupling_strength(p.fields);
        } else {
            const double x = parse_number(v, "run.delta", e->line);
            c.delta = units == UnitMode::mhz ? mhz_to_gamma3(x) : x;
        }
        if (const auto* m = t.find("run.delta_mhz")) {
            throw ConfigError("both 'run.delta' and 'run.delta_mhz' given", m->line);
        }
    } else if (const auto* m = t.find("run.delta_mhz")) {
        c.delta = mhz_to_gamma3(parse_number(m->value, "run.delta_mhz", m->line));
    }
    if (auto v = t.integer("run.phase_steps")) c.phase_steps = *v;
    if (auto v = t.number("run.fluorescence_scale")) c.fluorescence_scale = *v;
    if (auto v = t.rate("run.delay_step")) c.delay_step = *v;

    const bool any_waveform = t.has("waveform.kind") || t.has("waveform.frequency_hz") ||
                              t.has("waveform.amplitude") || t.has("waveform.offset") || t.has("waveform.samples");
    if (any_waveform) {
        PhaseWaveform w = c.waveform.value_or(PhaseWaveform{WaveformKind::square, 2300.0, std::numbers::pi, 0.0, 128});
        if (const auto* e = t.find("waveform.kind")) {
            const auto k = trim(e->value);
            if (k == "square") {
                w.kind = WaveformKind::square;
            } else if (k == "sinusoid" || k == "sin") {
                w.kind = WaveformKind::sinusoid;
            } else {
                throw ConfigError("waveform.kind must be 'square' or 'sinusoid'", e->line);
            }
        }
        if (auto v = t.number("waveform.frequency_hz")) w.frequency_hz = *v;
        if (auto v = t.angle("waveform.amplitude")) w.amplitude = *v;
        if (auto v = t.angle("waveform.offset")) w.offset = *v;
        if (auto v = t.integer("waveform.samples")) w.samples_per_period = *v;
        c.waveform = w;
    }

    if (const auto* e = t.find("output.csv")) c.csv_path = e->value;
    if (const auto* e = t.find("output.svg")) c.svg_path = e->value;

    for (const auto& [key, line] : t.unused()) {
        if (options.strict) {
            throw ConfigError("unknown key '" + key + "'", line);
        }
        c.warnings.push_back("line " + std::to_string(line) + ": ignoring unknown key '" + key + "'");
    }

    if (!(c.grid.step > 0.0) || !(c.grid.start < c.grid.stop)) {
        throw ConfigError("grid needs start < stop and step > 0");
    }
    if (c.phase_steps < 1) throw ConfigError("run.phase_steps must be >= 1");
    if (!(c.delay_step > 0.0)) throw ConfigError("run.delay_step must be > 0");
    if (c.waveform && c.waveform->samples_per_period < 1) throw ConfigError("waveform.samples must be >= 1");

    const auto report = validate(p);
    if (options.check_params && !report.ok()) {
        throw ConfigError("invalid parameters:\n" + report.to_string());
    }
    for (const auto& w : report.warnings) c.warnings.push_back(w);
    return c;
}

std::string dump_config(const RunConfig& c) {
    std::ostringstream os;
    auto kv = [&](const char* key, double v) { os << key << " = " << format_exact(v) << '\n'; };
    const auto& p = c.params;

    os << "# gamma_3 units\n";
    os << "units = gamma3\n";
    os << "\n[fields]\n";
    for (const auto& [name, f] : {std::pair{"omega_p", p.fields.omega_p}, std::pair{"omega_c", p.fields.omega_c},
                                  std::pair{"omega_1", p.fields.omega_1}, std::pair{"omega_2", p.fields.omega_2}}) {
        os << name << " = " << format_exact(f.amplitude()) << '\n';
        os << name << "_phase = " << format_exact(f.phase()) << '\n';
    }
    os << "\n[detunings]\n";
    kv("delta_p", p.detunings.delta_p);
    kv("delta_1", p.detunings.delta_1);
    kv("delta_c", p.detunings.delta_c);
    kv("delta_2", p.detunings.delta_2);
    os << "\n[decays]\n";
    kv("gamma_2", p.decays.gamma_2);
    kv("gamma_3", p.decays.gamma_3);
    kv("gamma_4", p.decays.gamma_4);
    os << "\n[medium]\n";
    kv("k13_ell", p.medium.k13_ell);
    kv("k14_ell", p.medium.k14_ell);
    os << "n_slices = " << p.medium.n_slices << '\n';
    kv("omega_ratio", p.medium.omega_ratio);
    os << "\n[grid]\n";
    kv("start", c.grid.start);
    kv("stop", c.grid.stop);
    kv("step", c.grid.step);
    os << "\n[run]\n";
    kv("delta", c.delta);
    os << "phase_steps = " << c.phase_steps << '\n';
    kv("fluorescence_scale", c.fluorescence_scale);
    kv("delay_step", c.delay_step);
    if (c.waveform) {
        os << "\n[waveform]\n";
        os << "kind = " << to_string(c.waveform->kind) << '\n';
        kv("frequency_hz", c.waveform->frequency_hz);
        kv("amplitude", c.waveform->amplitude);
        kv("offset", c.waveform->offset);
        os << "samples = " << c.waveform->samples_per_period << '\n';
    }
    if (c.csv_path || c.svg_path) {
        os << "\n[output]\n";
        if (c.csv_path) os << "csv = " << *c.csv_path << '\n';
        if (c.svg_path) os << "svg = " << *c.svg_path << '\n';
    }
    return os.str();
}

}  // namespace phaseswitch
