#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/drawing.hpp"
#include "fanplanar/geometry.hpp"

namespace fanplanar {

/// Per edge (drawing order): the common endpoint of its crossers when it has at least two.
using AnchorTable = std::vector<std::optional<std::string>>;

enum class PatternKind { PatternI, PatternII, PatternIII };

constexpr std::string_view to_string(PatternKind k) {
    switch (k) {
    case PatternKind::PatternI: return "PATTERN_I";
    case PatternKind::PatternII: return "PATTERN_II";
    case PatternKind::PatternIII: return "PATTERN_III";
    }
    return "UNKNOWN";
}

struct PatternViolation {
    PatternKind kind;
    std::size_t edge = 0;
    std::size_t f = 0;
    std::size_t g = 0;
    std::vector<Point> crossing_points;         // e with f, e with g
    std::optional<std::string> shared_endpoint; // w, for II/III
    std::vector<std::string> inside_endpoints;  // endpoints of e in the bounded cell
};

struct PatternIResult {
    AnchorTable anchors;
    std::vector<PatternViolation> violations;
};

inline PatternIResult check_pattern_I(const Drawing& d, const CrossingSet& cs) {
    PatternIResult out;
    out.anchors.assign(d.edge_count(), std::nullopt);
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        std::vector<std::size_t> crossers = cs.crossers(e);
        if (crossers.size() < 2) continue;
        std::optional<std::string> common;
        for (const std::string* cand : {&d.edges()[crossers[0]].source, &d.edges()[crossers[0]].target}) {
            bool all = true;
            for (std::size_t c : crossers) all = all && d.has_endpoint(c, *cand);
            if (all) common = *cand;
        }
        if (common) {
            out.anchors[e] = common;
            continue;
        }
        // Witness: an independent pair when one exists, else the first pair lacking a common third.
        std::size_t wf = crossers[0], wg = crossers[1];
        bool found = false;
        for (std::size_t i = 0; i < crossers.size() && !found; ++i)
            for (std::size_t j = i + 1; j < crossers.size() && !found; ++j)
                if (!d.share_endpoint(crossers[i], crossers[j])) {
                    wf = crossers[i];
                    wg = crossers[j];
                    found = true;
                }
        PatternViolation v{PatternKind::PatternI, e, wf, wg, {}, std::nullopt, {}};
        v.crossing_points.push_back(cs.crossings[*cs.between(e, wf)].point);
        v.crossing_points.push_back(cs.crossings[*cs.between(e, wg)].point);
        out.violations.push_back(std::move(v));
    }
    return out;
}

/// Boundary of the bounded cell left by e, f and g: e between its crossings with f and g,
/// then g up to the shared endpoint w, then f back down to its crossing with e.
inline ClosedCurve bounded_cell(const Drawing& d, const CrossingSet& cs, std::size_t e, std::size_t f,
                                std::size_t g) {
    auto xf = cs.between(e, f);
    auto xg = cs.between(e, g);
    if (!xf || !xg || f == g) throw Error(ErrorCode::Precondition, "f and g must both cross e");
    if (cs.cross(f, g)) throw Error(ErrorCode::Precondition, "f and g cross each other");
    auto w = d.shared_endpoint(f, g);
    if (!w) throw Error(ErrorCode::Precondition, "f and g share no endpoint");
    const Edge& ef = d.edges()[f];
    const Edge& eg = d.edges()[g];
    if ((ef.source == eg.source && ef.target == eg.target) || (ef.source == eg.target && ef.target == eg.source))
        throw Error(ErrorCode::Precondition, "f and g share both endpoints");

    PolyChain ce = d.chain(e), cf = d.chain(f), cg = d.chain(g);
    auto end_position = [](const PolyChain& c, bool at_source) {
        return at_source ? ChainPosition{0, Rational(0)} : ChainPosition{c.links() - 1, Rational(1)};
    };
    const Point& pf = cs.crossings[*xf].point;
    const Point& pg = cs.crossings[*xg].point;
    const Point& pw = d.point_of(*w);

    std::vector<Point> pts = subchain(ce, cs.position_on(*xf, e), pf, cs.position_on(*xg, e), pg);
    std::vector<Point> along_g =
        subchain(cg, cs.position_on(*xg, g), pg, end_position(cg, eg.source == *w), pw);
    std::vector<Point> along_f =
        subchain(cf, end_position(cf, ef.source == *w), pw, cs.position_on(*xf, f), pf);
    pts.insert(pts.end(), along_g.begin() + 1, along_g.end());
    pts.insert(pts.end(), along_f.begin() + 1, along_f.end());
    pts.pop_back(); // closes on pf
    return ClosedCurve{std::move(pts)};
}

inline std::vector<PatternViolation> check_patterns_II_III(const Drawing& d, const CrossingSet& cs) {
    std::vector<PatternViolation> out;
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        std::vector<std::size_t> crossers = cs.crossers(e);
        const Edge& edge = d.edges()[e];
        for (std::size_t i = 0; i < crossers.size(); ++i) {
            for (std::size_t j = i + 1; j < crossers.size(); ++j) {
                std::size_t f = crossers[i], g = crossers[j];
                auto w = d.shared_endpoint(f, g);
                if (!w || cs.cross(f, g)) continue;
                ClosedCurve cell = bounded_cell(d, cs, e, f, g);
                std::vector<std::string> inside;
                for (const std::string* end : {&edge.source, &edge.target})
                    if (point_in_region(d.point_of(*end), cell) == Region::Inside) inside.push_back(*end);
                if (inside.empty()) continue;
                PatternViolation v{inside.size() == 1 ? PatternKind::PatternII : PatternKind::PatternIII,
                                   e, f, g, {}, w, inside};
                v.crossing_points.push_back(cs.crossings[*cs.between(e, f)].point);
                v.crossing_points.push_back(cs.crossings[*cs.between(e, g)].point);
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

struct FanReport {
    bool strongly_fan_planar = false;
    SimplicityReport simplicity;
    std::vector<PatternViolation> violations;
    AnchorTable anchors;
    bool density_advisory = true;
    std::size_t crossing_count = 0;
};

inline bool density_ok(std::size_t n, std::size_t m) { return n < 3 || m + 10 <= 5 * n; }

inline FanReport fan_report(const Drawing& d) {
    FanReport r;
    r.density_advisory = density_ok(d.vertex_count(), d.edge_count());
    r.simplicity = validate_simplicity(d);
    r.anchors.assign(d.edge_count(), std::nullopt);
    if (!r.simplicity.ok) return r;
    CrossingSet cs = compute_crossings(d);
    r.crossing_count = cs.crossings.size();
    PatternIResult p1 = check_pattern_I(d, cs);
    r.anchors = std::move(p1.anchors);
    r.violations = std::move(p1.violations);
    for (auto& v : check_patterns_II_III(d, cs)) r.violations.push_back(std::move(v));
    r.strongly_fan_planar = r.violations.empty();
    return r;
}

inline nlohmann::ordered_json to_json(const Drawing& d, const PatternViolation& v) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(v.kind));
    j["edge"] = d.edges()[v.edge].id;
    j["witnesses"] = {d.edges()[v.f].id, d.edges()[v.g].id};
    j["crossing_points"] = nlohmann::ordered_json::array();
    for (const Point& p : v.crossing_points) j["crossing_points"].push_back(detail::point_json(p));
    j["shared_endpoint"] = v.shared_endpoint ? nlohmann::ordered_json(*v.shared_endpoint) : nlohmann::ordered_json();
    j["inside_endpoints"] = v.inside_endpoints;
    return j;
}

inline nlohmann::ordered_json to_json(const Drawing& d, const FanReport& r) {
    nlohmann::ordered_json j;
    j["strongly_fan_planar"] = r.strongly_fan_planar;
    j["vertex_count"] = d.vertex_count();
    j["edge_count"] = d.edge_count();
    j["crossing_count"] = r.crossing_count;
    j["density_advisory"] = r.density_advisory;
    j["simplicity"] = to_json(r.simplicity);
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) j["violations"].push_back(to_json(d, v));
    nlohmann::ordered_json anchors = nlohmann::ordered_json::object();
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        if (r.anchors[e]) anchors[d.edges()[e].id] = *r.anchors[e];
    j["anchors"] = std::move(anchors);
    return j;
}

} // namespace fanplanar
