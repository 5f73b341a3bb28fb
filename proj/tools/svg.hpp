#ifndef ROTORIENT_TOOLS_SVG_HPP
#define ROTORIENT_TOOLS_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace rotorient::svg {

struct Series {
    std::string label;
    std::string color;  // e.g. "#1f77b4"
    std::vector<std::pair<double, double>> points;
};

/// Minimal line plot: axes, ticks, legend, one polyline per series.
void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<Series>& series);

/// Minimal heatmap with a colorbar. values is row-major with ny rows of nx
/// values; rows map to y from y0 (bottom) to y1 (top).
void write_heatmap(const std::string& path, const std::string& title,
                   const std::string& x_label, const std::string& y_label, int nx, int ny,
                   double x0, double x1, double y0, double y1,
                   const std::vector<double>& values);

}  // namespace rotorient::svg

#endif
