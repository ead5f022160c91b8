#pragma once

// Spider chart rendering. Opposite axes carry d_value/d_volume and
// d_variety/d_visual, so the quadrilateral's area equals raw C4.

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capability.hpp"
#include "format.hpp"

namespace snacap {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Unit direction of each dimension's axis.
inline Point axis_direction(Dimension d) {
    switch (d) {
    case Dimension::value: return {1.0, 0.0};
    case Dimension::variety: return {0.0, 1.0};
    case Dimension::volume: return {-1.0, 0.0};
    case Dimension::visual: return {0.0, -1.0};
    }
    return {};
}

/// Polygon vertices in counter-clockwise order, in unit coordinates.
inline std::array<Point, 4> radar_vertices(const DimensionScores& s) {
    constexpr std::array<Dimension, 4> order{Dimension::value, Dimension::variety, Dimension::volume,
                                             Dimension::visual};
    std::array<Point, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        const Point u = axis_direction(order[i]);
        const double r = get(s, order[i]);
        // Multiplying by 0 would give -0 on negative axes; keep plain zeros.
        out[i] = {u.x == 0.0 ? 0.0 : u.x * r, u.y == 0.0 ? 0.0 : u.y * r};
    }
    return out;
}

inline double shoelace_area(const std::vector<Point>& pts) {
    double twice = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) / 2.0;
}

struct RadarSpec {
    DimensionScores scores;
    std::string title;
    /// Square canvas edge in pixels.
    double size = 400.0;
};

/// SVG document. The polygon and spokes are drawn inside a group whose
/// transform maps unit coordinates (y up) to the canvas, so the emitted
/// `points` are the unit vertices themselves.
inline std::string render_radar(const RadarSpec& spec) {
    const CapabilityScore c4 = capability_c4(spec.scores);
    if (!(spec.size > 0.0)) throw std::invalid_argument("radar canvas size must be positive");
    const double half = spec.size / 2.0;
    const double radius = half * 0.75;
    const std::string h = format_double(half);
    const std::string rad = format_double(radius);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(spec.size)
        << "\" height=\"" << format_double(spec.size) << "\" viewBox=\"0 0 "
        << format_double(spec.size) << ' ' << format_double(spec.size) << "\" data-c4-raw=\""
        << format_double(c4.raw) << "\" data-degeneracy=\"" << to_string(c4.degeneracy) << "\">\n";
    if (!spec.title.empty()) {
        std::string t;
        for (char ch : spec.title) {
            switch (ch) {
            case '&': t += "&amp;"; break;
            case '<': t += "&lt;"; break;
            case '>': t += "&gt;"; break;
            case '"': t += "&quot;"; break;
            default: t += ch;
            }
        }
        svg << "  <title>" << t << "</title>\n";
        svg << "  <text x=\"" << h << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << t
            << "</text>\n";
    }
    svg << "  <g transform=\"translate(" << h << ' ' << h << ") scale(" << rad << ' ' << '-' << rad
        << ")\" fill=\"none\" stroke-linejoin=\"round\">\n";

    // Gridlines: diamonds at each quarter step.
    for (int step = 1; step <= 4; ++step) {
        const std::string r = format_double(step * 0.25);
        svg << "    <polygon class=\"grid\" points=\"" << r << ",0 0," << r << " -" << r << ",0 0,-"
            << r << "\" stroke=\"#cccccc\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    svg << "    <line class=\"axis\" x1=\"-1\" y1=\"0\" x2=\"1\" y2=\"0\" stroke=\"#888888\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";
    svg << "    <line class=\"axis\" x1=\"0\" y1=\"-1\" x2=\"0\" y2=\"1\" stroke=\"#888888\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";

    const auto v = radar_vertices(spec.scores);
    if (c4.degeneracy == Degeneracy::full_4d) {
        svg << "    <polygon class=\"capability\" points=\"";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) svg << ' ';
            svg << format_double(v[i].x) << ',' << format_double(v[i].y);
        }
        svg << "\" fill=\"#4a7ab5\" fill-opacity=\"0.45\" stroke=\"#1f4e8c\" "
               "vector-effect=\"non-scaling-stroke\"/>\n";
    } else {
        for (const auto& p : v) {
            if (p.x == 0.0 && p.y == 0.0) continue;
            svg << "    <line class=\"spoke\" x1=\"0\" y1=\"0\" x2=\"" << format_double(p.x) << "\" y2=\""
                << format_double(p.y) << "\" stroke=\"#1f4e8c\" vector-effect=\"non-scaling-stroke\"/>\n";
        }
    }
    svg << "  </g>\n";

    // Axis labels sit just beyond the unit circle.
    const double off = radius + 14.0;
    const std::array<std::pair<Dimension, const char*>, 4> labels{
        {{Dimension::value, "Value"}, {Dimension::variety, "Variety"},
         {Dimension::volume, "Volume"}, {Dimension::visual, "Visual"}}};
    for (const auto& [d, name] : labels) {
        const Point u = axis_direction(d);
        const double x = half + u.x * off;
        const double y = half - u.y * off + (u.y < 0 ? 10.0 : 0.0);
        svg << "  <text class=\"label\" x=\"" << format_double(x) << "\" y=\"" << format_double(y)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << name << ' '
            << format_2dp(get(spec.scores, d)) << "</text>\n";
    }
    if (c4.degeneracy != Degeneracy::full_4d)
        svg << "  <text class=\"degenerate\" x=\"" << h << "\" y=\"" << format_double(spec.size - 6.0)
            << "\" text-anchor=\"middle\" font-size=\"11\">degenerate: " << to_string(c4.degeneracy)
            << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace snacap
