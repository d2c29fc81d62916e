#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanplanar/drawing.hpp"

namespace fanplanar {

inline const char* palette_color(int c) {
    switch (c) {
    case 1: return "#1b9e77";
    case 2: return "#d95f02";
    case 3: return "#7570b3";
    default: return "#555555";
    }
}

struct SvgStyle {
    double size = 600;   // canvas side in px
    double margin = 30;
    double vertex_radius = 4;
    double marker_radius = 2;
    double stroke_width = 1.5;
};

namespace detail {

// Exact rationals mapped to pixels; fixed precision keeps the bytes deterministic.
inline std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v == 0 ? 0.0 : v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

/// Vertices as circles, edges as polylines (palette color or neutral), crossings as markers.
inline std::string render_svg(const Drawing& d, const std::optional<std::map<std::string, int>>& colors = std::nullopt,
                              const SvgStyle& style = {}) {
    std::vector<Point> all;
    for (const Vertex& v : d.vertices()) all.push_back(v.pos);
    for (const Edge& e : d.edges())
        for (const Point& b : e.bends) all.push_back(b);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(style.size) +
                      "\" height=\"" + detail::fixed(style.size) + "\" viewBox=\"0 0 " + detail::fixed(style.size) +
                      " " + detail::fixed(style.size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (all.empty()) return out + "</svg>\n";

    Rational minx = all[0].x, maxx = all[0].x, miny = all[0].y, maxy = all[0].y;
    for (const Point& p : all) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    Rational span = std::max(maxx - minx, maxy - miny);
    if (span == 0) span = 1;
    const double inner = style.size - 2 * style.margin;
    auto px = [&](const Point& p) {
        Rational sx = (p.x - minx) / span, sy = (maxy - p.y) / span; // y grows downward
        return detail::fixed(style.margin + sx.get_d() * inner) + "," + detail::fixed(style.margin + sy.get_d() * inner);
    };
    auto coord = [&](const Point& p, const char* ax, const char* ay) {
        std::string xy = px(p);
        auto comma = xy.find(',');
        return std::string(" ") + ax + "=\"" + xy.substr(0, comma) + "\" " + ay + "=\"" + xy.substr(comma + 1) + "\"";
    };

    for (std::size_t i = 0; i < d.edge_count(); ++i) {
        const Edge& e = d.edges()[i];
        int c = 0;
        if (colors) {
            auto it = colors->find(e.id);
            if (it != colors->end()) c = it->second;
        }
        std::string pts;
        for (const Point& p : d.chain(i).points) pts += (pts.empty() ? "" : " ") + px(p);
        out += "<polyline id=\"" + detail::xml_escape(e.id) + "\" points=\"" + pts + "\" fill=\"none\" stroke=\"" + palette_color(c) +
               "\" stroke-width=\"" + detail::fixed(style.stroke_width) + "\"/>\n";
    }
    SimplicityReport simple = validate_simplicity(d);
    if (simple.ok)
        for (const Crossing& c : compute_crossings(d).crossings)
            out += "<circle class=\"crossing\"" + coord(c.point, "cx", "cy") + " r=\"" +
                   detail::fixed(style.marker_radius) + "\" fill=\"#000000\"/>\n";
    for (const Vertex& v : d.vertices())
        out += "<circle id=\"" + detail::xml_escape(v.id) + "\"" + coord(v.pos, "cx", "cy") + " r=\"" + detail::fixed(style.vertex_radius) +
               "\" fill=\"#222222\"/>\n";
    return out + "</svg>\n";
}

} // namespace fanplanar
