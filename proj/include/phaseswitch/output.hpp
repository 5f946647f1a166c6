// CSV tables and self-contained SVG line plots.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace phaseswitch {

/// Decimal text with 15 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);
std::string format_number(const std::optional<double>& v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

/// Comma-separated, LF line endings, header first. Cells containing commas or
/// quotes are quoted.
void write_csv(std::ostream& os, const Table& table);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;  // non-finite values break the line
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width = 720;
    int height = 450;
};

std::string render_svg(const PlotSpec& plot);

/// Roughly `target` evenly spaced round tick positions covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace phaseswitch
