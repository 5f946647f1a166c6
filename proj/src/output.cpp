#include "phaseswitch/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace phaseswitch {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string escape_xml(const std::string& s) {
    std::string out;
    for (const char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    if (std::abs(v) < 1e-12) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string format_number(const std::optional<double>& v) { return v ? format_number(*v) : "nan"; }

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) {
        throw std::logic_error("Table::add_row: column count mismatch");
    }
    rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& table) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << csv_cell(cells[i]);
        }
        os << '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
    if (!(hi > lo)) {
        return {lo};
    }
    const double raw = (hi - lo) / std::max(target, 1);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (const double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * step; t += step) {
        ticks.push_back(t);
    }
    return ticks;
}

std::string render_svg(const PlotSpec& plot) {
    const double left = 70, right = 20, top = 40, bottom = 55;
    const double w = plot.width, h = plot.height;
    const double pw = w - left - right, ph = h - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : plot.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = 0; xmax = 1; ymin = 0; ymax = 1;
    }
    if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
    if (ymax == ymin) { ymin -= 0.5; ymax += 0.5; }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\"" << plot.height
       << "\" viewBox=\"0 0 " << plot.width << ' ' << plot.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << plot.width << "\" height=\"" << plot.height << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << coord(w / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
       << escape_xml(plot.title) << "</text>\n";

    for (const double t : nice_ticks(xmin, xmax)) {
        const auto x = coord(sx(t));
        os << "<line x1=\"" << x << "\" y1=\"" << coord(top) << "\" x2=\"" << x << "\" y2=\"" << coord(top + ph)
           << "\" stroke=\"#e0e0e0\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << coord(top + ph + 16) << "\" text-anchor=\"middle\">"
           << tick_label(t) << "</text>\n";
    }
    for (const double t : nice_ticks(ymin, ymax)) {
        const auto y = coord(sy(t));
        os << "<line x1=\"" << coord(left) << "\" y1=\"" << y << "\" x2=\"" << coord(left + pw) << "\" y2=\"" << y
           << "\" stroke=\"#e0e0e0\"/>\n";
        os << "<text x=\"" << coord(left - 6) << "\" y=\"" << coord(sy(t) + 4) << "\" text-anchor=\"end\">"
           << tick_label(t) << "</text>\n";
    }
    os << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top) << "\" width=\"" << coord(pw) << "\" height=\""
       << coord(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << coord(left + pw / 2) << "\" y=\"" << coord(h - 12) << "\" text-anchor=\"middle\">"
       << escape_xml(plot.x_label) << "</text>\n";
    os << "<text transform=\"translate(16," << coord(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
       << escape_xml(plot.y_label) << "</text>\n";

    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto& s = plot.series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        std::string points;
        auto flush = [&]() {
            if (!points.empty()) {
                os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points
                   << "\"/>\n";
                points.clear();
            }
        };
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            if (!points.empty()) points += ' ';
            points += coord(sx(s.x[i])) + ',' + coord(sy(s.y[i]));
        }
        flush();

        const double ly = top + 14 + 16.0 * static_cast<double>(k);
        os << "<line x1=\"" << coord(left + pw - 120) << "\" y1=\"" << coord(ly) << "\" x2=\""
           << coord(left + pw - 100) << "\" y2=\"" << coord(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << coord(left + pw - 95) << "\" y=\"" << coord(ly + 4) << "\">" << escape_xml(s.label)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace phaseswitch
