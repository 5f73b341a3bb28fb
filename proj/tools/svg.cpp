#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace rotorient::svg {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0, hi = 1.0;
    double clamp01(double v) const { return hi == lo ? 0.5 : (v - lo) / (hi - lo); }
};

Range nice_range(double lo, double hi) {
    if (!(hi > lo)) {
        hi = lo + 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

// Five-stop dark-blue-to-yellow palette, linearly interpolated.
std::string palette(double u) {
    static const double stops[5][3] = {{68, 1, 84},     {59, 82, 139},  {33, 145, 140},
                                       {94, 201, 98},   {253, 231, 37}};
    u = std::clamp(u, 0.0, 1.0) * 4.0;
    const int i = std::min(3, int(u));
    const double f = u - i;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  int(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                  int(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                  int(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
    return buf;
}

void open_svg(std::ofstream& out, const std::string& path, const std::string& title) {
    out.open(path);
    if (!out) throw std::runtime_error("cannot write SVG file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape(title) << "</text>\n";
}

void draw_axes(std::ofstream& out, const std::string& x_label, const std::string& y_label,
               const Range& xr, const Range& yr, int plot_right) {
    const int x0 = kMarginLeft, x1 = plot_right;
    const int y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\""
        << y0 - y1 << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = i / 4.0;
        const int px = int(x0 + fx * (x1 - x0));
        const int py = int(y0 - fx * (y0 - y1));
        out << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\""
            << y0 + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << px << "\" y=\"" << y0 + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(xr.lo + fx * (xr.hi - xr.lo)) << "</text>\n"
            << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\""
            << py << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << x0 - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(yr.lo + fx * (yr.hi - yr.lo)) << "</text>\n";
    }
    out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(x_label)
        << "</text>\n"
        << "<text x=\"18\" y=\"" << (y0 + y1) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << (y0 + y1) / 2 << ")\">" << escape(y_label) << "</text>\n";
}

}  // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<Series>& series) {
    double xlo = std::numeric_limits<double>::max(), xhi = std::numeric_limits<double>::lowest();
    double ylo = xlo, yhi = xhi;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    if (series.empty() || xlo > xhi) {
        xlo = 0.0;
        xhi = 1.0;
        ylo = 0.0;
        yhi = 1.0;
    }
    const Range xr{xlo, xhi}, yr = nice_range(ylo, yhi);

    std::ofstream out;
    open_svg(out, path, title);
    const int plot_right = kWidth - kMarginRight;
    draw_axes(out, x_label, y_label, xr, yr, plot_right);

    const int x0 = kMarginLeft, x1 = plot_right;
    const int y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    int legend_y = kMarginTop + 14;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
            const double px = x0 + xr.clamp01(x) * (x1 - x0);
            const double py = y0 - yr.clamp01(y) * (y0 - y1);
            out << num(px) << "," << num(py) << " ";
        }
        out << "\"/>\n";
        out << "<line x1=\"" << x0 + 10 << "\" y1=\"" << legend_y << "\" x2=\"" << x0 + 34
            << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << x0 + 40 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
        legend_y += 18;
    }
    out << "</svg>\n";
}

void write_heatmap(const std::string& path, const std::string& title,
                   const std::string& x_label, const std::string& y_label, int nx, int ny,
                   double x0v, double x1v, double y0v, double y1v,
                   const std::vector<double>& values) {
    if (int(values.size()) != nx * ny) {
        throw std::invalid_argument("write_heatmap: values size mismatch");
    }
    double vlo = std::numeric_limits<double>::max(), vhi = std::numeric_limits<double>::lowest();
    for (double v : values) {
        if (std::isfinite(v)) {
            vlo = std::min(vlo, v);
            vhi = std::max(vhi, v);
        }
    }
    if (vlo > vhi) {
        vlo = 0.0;
        vhi = 1.0;
    }
    const Range vr{vlo, vhi == vlo ? vlo + 1.0 : vhi};

    std::ofstream out;
    open_svg(out, path, title);
    const int bar_width = 50;
    const int plot_right = kWidth - kMarginRight - bar_width;
    draw_axes(out, x_label, y_label, Range{x0v, x1v}, Range{y0v, y1v}, plot_right);

    const int px0 = kMarginLeft, px1 = plot_right;
    const int py0 = kHeight - kMarginBottom, py1 = kMarginTop;
    const double cell_w = double(px1 - px0) / nx;
    const double cell_h = double(py0 - py1) / ny;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const double v = values[size_t(iy) * nx + ix];
            const std::string color = std::isfinite(v) ? palette(vr.clamp01(v)) : "#bbbbbb";
            out << "<rect x=\"" << num(px0 + ix * cell_w) << "\" y=\""
                << num(py0 - (iy + 1) * cell_h) << "\" width=\"" << num(cell_w + 0.5)
                << "\" height=\"" << num(cell_h + 0.5) << "\" fill=\"" << color << "\"/>\n";
        }
    }

    // colorbar
    const int bx = plot_right + 12;
    for (int i = 0; i < 100; ++i) {
        const double f = (i + 0.5) / 100.0;
        out << "<rect x=\"" << bx << "\" y=\"" << num(py0 - (i + 1) * (py0 - py1) / 100.0)
            << "\" width=\"16\" height=\"" << num(double(py0 - py1) / 100.0 + 0.5) << "\" fill=\""
            << palette(f) << "\"/>\n";
    }
    out << "<text x=\"" << bx + 20 << "\" y=\"" << py0 + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(vr.lo) << "</text>\n"
        << "<text x=\"" << bx + 20 << "\" y=\"" << py1 + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(vr.hi) << "</text>\n"
        << "</svg>\n";
}

}  // namespace rotorient::svg
