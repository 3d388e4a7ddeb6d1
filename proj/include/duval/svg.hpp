#ifndef DUVAL_SVG_HPP
#define DUVAL_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace duval {

struct DiagramPoint {
    LatticeVector ray;
    double x = 0;
    double y = 0;
    bool inserted = false;
};

struct DiagramSegment {
    std::size_t from = 0;
    std::size_t to = 0;
};

/// Trace of a fan on the plane x + y + z = 1, drawn in the triangle
/// e_1 (lower left), e_2 (lower right), e_3 (top).
struct FanDiagram {
    std::vector<DiagramPoint> points;
    std::vector<DiagramSegment> segments;
};

namespace detail {

constexpr double diagram_side = 600.0;
constexpr double diagram_margin = 60.0;

inline std::pair<double, double> barycentric_position(const LatticeVector& v) {
    const double s = static_cast<double>(v.coordinate_sum());
    const double b = static_cast<double>(v[1]) / s;
    const double c = static_cast<double>(v[2]) / s;
    const double h = diagram_side * 0.8660254037844386;
    const double x = diagram_margin + diagram_side * (b + c / 2);
    const double y = diagram_margin + h * (1 - c);
    return {x, y};
}

inline std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace detail

/// Rays of the fan that are not in `base` are marked inserted.
inline FanDiagram fan_diagram(const Fan& fan, const std::vector<LatticeVector>& base) {
    FanDiagram d;
    for (const auto& r : fan.rays()) {
        if (!r.is_nonnegative() || r.is_zero()) {
            throw std::invalid_argument("barycentric trace needs rays in the nonnegative octant, got " + to_string(r));
        }
        const auto [x, y] = detail::barycentric_position(r);
        d.points.push_back({r, x, y, std::find(base.begin(), base.end(), r) == base.end()});
    }
    for (const auto& w : fan.two_dimensional_cones()) {
        d.segments.push_back({fan.ray_index(w.rays()[0]), fan.ray_index(w.rays()[1])});
    }
    return d;
}

inline std::string render_svg(const FanDiagram& d, const std::string& title) {
    const double width = detail::diagram_side + 2 * detail::diagram_margin;
    const double height = detail::diagram_side * 0.8660254037844386 + 2 * detail::diagram_margin;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(width) + "\" height=\"" +
           detail::fixed(height) + "\" viewBox=\"0 0 " + detail::fixed(width) + " " + detail::fixed(height) + "\">\n";
    out += "<title>" + title + "</title>\n";
    out += "<style>\n"
           ".wall{stroke:#444;stroke-width:1.5}\n"
           ".gamma{fill:#000;stroke:#000}\n"
           ".inserted{fill:#fff;stroke:#c0392b;stroke-width:2}\n"
           "text{font-family:monospace;font-size:11px}\n"
           "</style>\n";
    out += "<g id=\"walls\">\n";
    for (const auto& s : d.segments) {
        const auto& a = d.points[s.from];
        const auto& b = d.points[s.to];
        out += "<line class=\"wall\" x1=\"" + detail::fixed(a.x) + "\" y1=\"" + detail::fixed(a.y) + "\" x2=\"" +
               detail::fixed(b.x) + "\" y2=\"" + detail::fixed(b.y) + "\"/>\n";
    }
    out += "</g>\n<g id=\"rays\">\n";
    for (const auto& p : d.points) {
        const std::string label = to_string(p.ray);
        out += "<g class=\"ray\"><circle class=\"" + std::string(p.inserted ? "inserted" : "gamma") + "\" cx=\"" +
               detail::fixed(p.x) + "\" cy=\"" + detail::fixed(p.y) + "\" r=\"4\"/><text x=\"" +
               detail::fixed(p.x + 6) + "\" y=\"" + detail::fixed(p.y - 6) + "\">" + label + "</text></g>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace duval

#endif
