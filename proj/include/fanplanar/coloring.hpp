#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/cycle_analysis.hpp"
#include "fanplanar/drawing.hpp"
#include "fanplanar/fanplanarity.hpp"
#include "fanplanar/intersection_graph.hpp"

namespace fanplanar {

struct GroundSet {
    std::set<std::size_t> edges; // drawing edge indices
    /// Edge index → the chordless odd cycle whose scan inserted it.
    std::map<std::size_t, ChordlessCycle> provenance;
};

/// Ground set from the chordless odd cycles of g, in enumeration order. Both defining
/// invariants are re-checked before returning.
inline GroundSet select_ground_set(const Drawing& d, const CrossingSet& cs, const IGraph& g,
                                   std::optional<std::size_t> cap = std::nullopt) {
    EnumerationOptions opt;
    opt.min_len = 5;
    opt.parity = Parity::Odd;
    opt.cap = cap;
    GroundSet s;
    std::set<std::size_t> nodes;
    for (const ChordlessCycle& c : enumerate_chordless_cycles(g, opt)) {
        bool hit = false;
        for (std::size_t n : c.nodes) hit = hit || nodes.count(n);
        if (hit) continue;
        CycleGeometry geom = analyze_cycle(d, cs, g, c);
        std::size_t edge = geom.pos[ground_edge(geom)].edge;
        s.edges.insert(edge);
        s.provenance.emplace(edge, c);
        nodes.insert(*g.node_of(edge));
    }
    for (auto a = s.edges.begin(); a != s.edges.end(); ++a)
        for (auto b = std::next(a); b != s.edges.end(); ++b)
            if (cs.cross(*a, *b))
                throw Error(ErrorCode::KeyLemmaViolation,
                            "ground edges " + d.edges()[*a].id + " and " + d.edges()[*b].id + " cross");
    if (!bipartite_2coloring(g, nodes).bipartite())
        throw Error(ErrorCode::OddCycleSurvives, "intersection graph minus the ground set is not bipartite");
    return s;
}

struct EdgeColoring {
    std::map<std::string, int> colors; // edge id → 1, 2 or 3
    int colors_used = 0;
    GroundSet ground;
};

/// Ground set in color 3, the bipartite rest in colors 1 and 2.
inline EdgeColoring three_color(const Drawing& d, std::optional<std::size_t> cap = std::nullopt) {
    FanReport report = fan_report(d);
    if (!report.strongly_fan_planar) throw Error(ErrorCode::NotFanPlanar, "drawing is not strongly fan-planar");
    CrossingSet cs = compute_crossings(d);
    IGraph g = build_igraph(d, cs);
    EdgeColoring col;
    if (cs.crossings.empty()) {
        for (const Edge& e : d.edges()) col.colors[e.id] = 1;
        col.colors_used = d.edge_count() == 0 ? 0 : 1;
        return col;
    }
    TwoColoring plain = bipartite_2coloring(g);
    std::set<std::size_t> removed;
    if (!plain.bipartite()) {
        col.ground = select_ground_set(d, cs, g, cap);
        for (std::size_t e : col.ground.edges) removed.insert(*g.node_of(e));
    }
    TwoColoring rest = removed.empty() ? plain : bipartite_2coloring(g, removed);
    if (!rest.bipartite()) throw Error(ErrorCode::OddCycleSurvives, "remainder is not bipartite");
    std::set<int> used;
    for (std::size_t n = 0; n < g.size(); ++n) {
        int c = removed.count(n) ? 3 : rest.colors[n];
        col.colors[g.id(n)] = c;
        used.insert(c);
    }
    col.colors_used = static_cast<int>(used.size());
    return col;
}

struct ColoringViolation {
    std::string edge_a;
    std::string edge_b;
    int color = 0;
};

/// Crossing pairs sharing a color. Works on any coloring, however produced.
inline std::vector<ColoringViolation> verify_coloring(const Drawing& d, const std::map<std::string, int>& colors) {
    for (const Edge& e : d.edges())
        if (!colors.count(e.id)) throw Error(ErrorCode::MissingEdge, "no color for edge " + e.id);
    std::vector<ColoringViolation> out;
    CrossingSet cs = compute_crossings(d);
    for (const Crossing& c : cs.crossings) {
        const std::string& a = d.edges()[c.edge_a].id;
        const std::string& b = d.edges()[c.edge_b].id;
        int ca = colors.at(a);
        if (ca == colors.at(b)) out.push_back({std::min(a, b), std::max(a, b), ca});
    }
    std::sort(out.begin(), out.end(), [](const ColoringViolation& x, const ColoringViolation& y) {
        return std::tie(x.edge_a, x.edge_b) < std::tie(y.edge_a, y.edge_b);
    });
    return out;
}

inline std::vector<ColoringViolation> verify_coloring(const Drawing& d, const EdgeColoring& col) {
    return verify_coloring(d, col.colors);
}

struct Layer {
    int color = 0;
    Drawing drawing;
};

/// One crossing-free sub-drawing per used color, in color order.
inline std::vector<Layer> planar_layers(const Drawing& d, const EdgeColoring& col) {
    if (!verify_coloring(d, col).empty()) throw Error(ErrorCode::Precondition, "coloring has monochromatic crossings");
    std::map<int, std::vector<std::size_t>> by_color;
    for (std::size_t e = 0; e < d.edge_count(); ++e) by_color[col.colors.at(d.edges()[e].id)].push_back(e);
    std::vector<Layer> out;
    for (const auto& [c, edges] : by_color) {
        Drawing layer = d.subdrawing(edges);
        if (!compute_crossings(layer).crossings.empty())
            throw Error(ErrorCode::Precondition, "layer " + std::to_string(c) + " is not crossing-free");
        out.push_back({c, std::move(layer)});
    }
    return out;
}

inline nlohmann::ordered_json coloring_json(const Drawing& d, const EdgeColoring& col,
                                            const std::vector<Layer>& layers) {
    nlohmann::ordered_json j;
    j["colors_used"] = col.colors_used;
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    for (const auto& [id, c] : col.colors) colors[id] = c;
    j["colors"] = std::move(colors);
    std::vector<std::string> ground;
    for (std::size_t e : col.ground.edges) ground.push_back(d.edges()[e].id);
    std::sort(ground.begin(), ground.end());
    j["ground"] = ground;
    nlohmann::ordered_json ls = nlohmann::ordered_json::array();
    for (const Layer& l : layers) {
        std::vector<std::string> ids;
        for (const Edge& e : l.drawing.edges()) ids.push_back(e.id);
        std::sort(ids.begin(), ids.end());
        ls.push_back(ids);
    }
    j["layers"] = std::move(ls);
    return j;
}

} // namespace fanplanar
