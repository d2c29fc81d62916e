#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/error.hpp"
#include "fanplanar/geometry.hpp"

namespace fanplanar {

struct Vertex {
    std::string id;
    Point pos;
};

struct Edge {
    std::string id;
    std::string source;
    std::string target;
    std::vector<Point> bends;
};

/// A graph together with a fixed polyline drawing. Vertex and edge ids are unique.
class Drawing {
public:
    Drawing() = default;

    void add_vertex(Vertex v) {
        if (vertex_index_.count(v.id))
            throw Error(ErrorCode::DuplicateId, "vertex '" + v.id + "'");
        vertex_index_.emplace(v.id, vertices_.size());
        vertices_.push_back(std::move(v));
    }

    void add_edge(Edge e) {
        if (edge_index_.count(e.id)) throw Error(ErrorCode::DuplicateId, "edge '" + e.id + "'");
        for (const std::string* end : {&e.source, &e.target})
            if (!vertex_index_.count(*end))
                throw Error(ErrorCode::UnknownVertex, "edge '" + e.id + "' references '" + *end + "'");
        edge_index_.emplace(e.id, edges_.size());
        edges_.push_back(std::move(e));
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<std::size_t> find_vertex(const std::string& id) const {
        auto it = vertex_index_.find(id);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> find_edge(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end()) return std::nullopt;
        return it->second;
    }

    const Point& point_of(const std::string& vertex_id) const {
        return vertices_.at(vertex_index_.at(vertex_id)).pos;
    }

    /// Source point, bends, target point.
    PolyChain chain(std::size_t edge) const {
        const Edge& e = edges_.at(edge);
        PolyChain c;
        c.points.reserve(e.bends.size() + 2);
        c.points.push_back(point_of(e.source));
        c.points.insert(c.points.end(), e.bends.begin(), e.bends.end());
        c.points.push_back(point_of(e.target));
        return c;
    }

    bool share_endpoint(std::size_t a, std::size_t b) const { return shared_endpoint(a, b).has_value(); }

    std::optional<std::string> shared_endpoint(std::size_t a, std::size_t b) const {
        const Edge& ea = edges_.at(a);
        const Edge& eb = edges_.at(b);
        for (const std::string* u : {&ea.source, &ea.target})
            if (*u == eb.source || *u == eb.target) return *u;
        return std::nullopt;
    }

    bool has_endpoint(std::size_t edge, const std::string& vertex) const {
        const Edge& e = edges_.at(edge);
        return e.source == vertex || e.target == vertex;
    }

    const std::string& other_endpoint(std::size_t edge, const std::string& vertex) const {
        const Edge& e = edges_.at(edge);
        return e.source == vertex ? e.target : e.source;
    }

    /// Edges in `keep` (drawing order) with only the vertices they touch.
    Drawing subdrawing(const std::vector<std::size_t>& keep) const {
        std::set<std::string> used;
        for (std::size_t e : keep) {
            used.insert(edges_.at(e).source);
            used.insert(edges_.at(e).target);
        }
        Drawing sub;
        for (const Vertex& v : vertices_)
            if (used.count(v.id)) sub.add_vertex(v);
        std::vector<std::size_t> sorted(keep);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t e : sorted) sub.add_edge(edges_[e]);
        return sub;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> edge_index_;
};

// ---------------------------------------------------------------------------
// JSON file format

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

inline void require_keys(const nlohmann::json& obj, std::initializer_list<std::string_view> required,
                         std::initializer_list<std::string_view> optional, const std::string& where) {
    if (!obj.is_object()) throw Error(ErrorCode::Format, where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = std::find(required.begin(), required.end(), it.key()) != required.end() ||
                     std::find(optional.begin(), optional.end(), it.key()) != optional.end();
        if (!known) throw Error(ErrorCode::Format, where + ": unknown field '" + it.key() + "'");
    }
    for (std::string_view key : required)
        if (!obj.contains(std::string(key)))
            throw Error(ErrorCode::Format, where + ": missing field '" + std::string(key) + "'");
}

inline std::string string_field(const nlohmann::json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_string()) throw Error(ErrorCode::Format, where + "." + key + ": expected a string");
    return v.get<std::string>();
}

inline Rational rational_field(const nlohmann::json& obj, const char* key, const std::string& where) {
    std::string s = string_field(obj, key, where);
    try {
        return parse_rational(s);
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedRational, where + "." + key + ": '" + s + "'");
    }
}

inline nlohmann::ordered_json point_json(const Point& p) {
    nlohmann::ordered_json j;
    j["x"] = format_rational(p.x);
    j["y"] = format_rational(p.y);
    return j;
}

} // namespace detail

inline Drawing parse_drawing(std::string_view document) {
    if (document.size() >= 3 && static_cast<unsigned char>(document[0]) == 0xEF &&
        static_cast<unsigned char>(document[1]) == 0xBB && static_cast<unsigned char>(document[2]) == 0xBF)
        throw Error(ErrorCode::Format, "line 1: byte order mark not allowed");
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Format, "line " + std::to_string(detail::line_of(document, e.byte)) + ": " + e.what());
    }
    detail::require_keys(root, {"vertices", "edges"}, {}, "document");
    if (!root["vertices"].is_array()) throw Error(ErrorCode::Format, "vertices: expected an array");
    if (!root["edges"].is_array()) throw Error(ErrorCode::Format, "edges: expected an array");

    Drawing d;
    std::size_t i = 0;
    for (const auto& jv : root["vertices"]) {
        std::string where = "vertices[" + std::to_string(i++) + "]";
        detail::require_keys(jv, {"id", "x", "y"}, {}, where);
        Vertex v{detail::string_field(jv, "id", where),
                 Point{detail::rational_field(jv, "x", where), detail::rational_field(jv, "y", where)}};
        if (d.find_vertex(v.id)) throw Error(ErrorCode::DuplicateId, where + ": vertex '" + v.id + "'");
        d.add_vertex(std::move(v));
    }
    i = 0;
    for (const auto& je : root["edges"]) {
        std::string where = "edges[" + std::to_string(i++) + "]";
        detail::require_keys(je, {"id", "source", "target"}, {"bends"}, where);
        Edge e{detail::string_field(je, "id", where), detail::string_field(je, "source", where),
               detail::string_field(je, "target", where), {}};
        if (je.contains("bends")) {
            if (!je["bends"].is_array()) throw Error(ErrorCode::Format, where + ".bends: expected an array");
            std::size_t b = 0;
            for (const auto& jb : je["bends"]) {
                std::string bw = where + ".bends[" + std::to_string(b++) + "]";
                detail::require_keys(jb, {"x", "y"}, {}, bw);
                e.bends.push_back(Point{detail::rational_field(jb, "x", bw), detail::rational_field(jb, "y", bw)});
            }
        }
        if (d.find_edge(e.id)) throw Error(ErrorCode::DuplicateId, where + ": edge '" + e.id + "'");
        for (const std::string* end : {&e.source, &e.target})
            if (!d.find_vertex(*end))
                throw Error(ErrorCode::UnknownVertex, where + ": unknown vertex '" + *end + "'");
        d.add_edge(std::move(e));
    }
    return d;
}

inline nlohmann::ordered_json drawing_to_json(const Drawing& d) {
    nlohmann::ordered_json root;
    root["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : d.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["x"] = format_rational(v.pos.x);
        jv["y"] = format_rational(v.pos.y);
        root["vertices"].push_back(std::move(jv));
    }
    root["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : d.edges()) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["source"] = e.source;
        je["target"] = e.target;
        je["bends"] = nlohmann::ordered_json::array();
        for (const Point& b : e.bends) je["bends"].push_back(detail::point_json(b));
        root["edges"].push_back(std::move(je));
    }
    return root;
}

inline std::string write_drawing(const Drawing& d) { return drawing_to_json(d).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Simplicity and crossings

struct Crossing {
    std::size_t edge_a = 0; // edge_a < edge_b
    std::size_t edge_b = 0;
    Point point;
    ChainPosition pos_a;
    ChainPosition pos_b;
};

struct CrossingSet {
    std::vector<Crossing> crossings;
    /// Per edge: crossing indices ordered from source to target.
    std::vector<std::vector<std::size_t>> along_edge;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair;

    std::optional<std::size_t> between(std::size_t a, std::size_t b) const {
        auto it = by_pair.find(std::minmax(a, b));
        if (it == by_pair.end()) return std::nullopt;
        return it->second;
    }
    bool cross(std::size_t a, std::size_t b) const { return by_pair.count(std::minmax(a, b)) > 0; }

    /// Position of a crossing along the given participating edge.
    const ChainPosition& position_on(std::size_t crossing, std::size_t edge) const {
        const Crossing& c = crossings.at(crossing);
        return edge == c.edge_a ? c.pos_a : c.pos_b;
    }

    /// Edges crossing `edge`, in order along it.
    std::vector<std::size_t> crossers(std::size_t edge) const {
        std::vector<std::size_t> out;
        for (std::size_t ci : along_edge.at(edge)) {
            const Crossing& c = crossings[ci];
            out.push_back(c.edge_a == edge ? c.edge_b : c.edge_a);
        }
        return out;
    }
};

enum class SimplicityKind {
    MultiEdge,
    SelfLoop,
    AdjacentCross,
    DoubleCross,
    CoincidentCrossings,
    EdgeThroughVertex,
    Degeneracy,
    NonSimpleChain,
};

constexpr std::string_view to_string(SimplicityKind k) {
    switch (k) {
    case SimplicityKind::MultiEdge: return "MULTI_EDGE";
    case SimplicityKind::SelfLoop: return "SELF_LOOP";
    case SimplicityKind::AdjacentCross: return "ADJACENT_CROSS";
    case SimplicityKind::DoubleCross: return "DOUBLE_CROSS";
    case SimplicityKind::CoincidentCrossings: return "COINCIDENT_CROSSINGS";
    case SimplicityKind::EdgeThroughVertex: return "EDGE_THROUGH_VERTEX";
    case SimplicityKind::Degeneracy: return "DEGENERACY";
    case SimplicityKind::NonSimpleChain: return "NON_SIMPLE_CHAIN";
    }
    return "UNKNOWN";
}

struct SimplicityFinding {
    SimplicityKind kind;
    std::vector<std::string> ids;
    std::optional<Point> point;
};

struct SimplicityReport {
    bool ok = true;
    std::vector<SimplicityFinding> violations;
};

namespace detail {

struct Scan {
    SimplicityReport report;
    std::vector<Crossing> crossings;
};

inline Scan scan_drawing(const Drawing& d) {
    Scan scan;
    auto& findings = scan.report.violations;
    const auto& edges = d.edges();
    const std::size_t m = edges.size();

    std::vector<PolyChain> chains;
    chains.reserve(m);
    for (std::size_t i = 0; i < m; ++i) chains.push_back(d.chain(i));

    std::map<std::pair<std::string, std::string>, std::size_t> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = edges[i];
        if (e.source == e.target) {
            findings.push_back({SimplicityKind::SelfLoop, {e.id}, d.point_of(e.source)});
            continue;
        }
        auto key = std::minmax(e.source, e.target);
        auto [it, fresh] = pairs.emplace(key, i);
        if (!fresh) findings.push_back({SimplicityKind::MultiEdge, {edges[it->second].id, e.id}, std::nullopt});
        if (!is_simple_chain(chains[i])) findings.push_back({SimplicityKind::NonSimpleChain, {e.id}, std::nullopt});
    }

    // Vertex points must be pairwise distinct.
    std::map<Point, std::size_t> at;
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        auto [it, fresh] = at.emplace(d.vertices()[v].pos, v);
        if (!fresh)
            findings.push_back({SimplicityKind::Degeneracy, {d.vertices()[it->second].id, d.vertices()[v].id},
                                d.vertices()[v].pos});
    }

    for (std::size_t i = 0; i < m; ++i) {
        const PolyChain& c = chains[i];
        for (const Vertex& v : d.vertices()) {
            for (std::size_t l = 0; l < c.links(); ++l) {
                if (!on_segment(v.pos, c.link(l))) continue;
                bool terminal = (l == 0 && v.pos == c.front() && v.id == edges[i].source) ||
                                (l + 1 == c.links() && v.pos == c.back() && v.id == edges[i].target);
                if (terminal) continue;
                findings.push_back({SimplicityKind::EdgeThroughVertex, {edges[i].id, v.id}, v.pos});
                break;
            }
        }
    }

    for (std::size_t a = 0; a < m; ++a) {
        if (edges[a].source == edges[a].target) continue;
        for (std::size_t b = a + 1; b < m; ++b) {
            if (edges[b].source == edges[b].target) continue;
            std::vector<Crossing> found;
            bool degenerate_reported = false;
            for (std::size_t la = 0; la < chains[a].links(); ++la) {
                for (std::size_t lb = 0; lb < chains[b].links(); ++lb) {
                    SegmentContact contact = classify_contact(chains[a].link(la), chains[b].link(lb));
                    using K = SegmentContact::Kind;
                    if (contact.kind == K::Disjoint) continue;
                    if (contact.kind == K::Proper) {
                        found.push_back({a, b, contact.point, position_of(chains[a], la, contact.point),
                                         position_of(chains[b], lb, contact.point)});
                        continue;
                    }
                    if (contact.kind == K::SharedEndpoint && at.count(contact.point)) {
                        // Meeting at a vertex: legal only as a common endpoint of both edges,
                        // anything else is already an EDGE_THROUGH_VERTEX finding.
                        continue;
                    }
                    if (!degenerate_reported) {
                        findings.push_back({SimplicityKind::Degeneracy, {edges[a].id, edges[b].id}, contact.point});
                        degenerate_reported = true;
                    }
                }
            }
            if (found.empty()) continue;
            if (d.share_endpoint(a, b))
                findings.push_back({SimplicityKind::AdjacentCross, {edges[a].id, edges[b].id}, found.front().point});
            if (found.size() >= 2)
                findings.push_back({SimplicityKind::DoubleCross, {edges[a].id, edges[b].id}, found[1].point});
            for (auto& c : found) scan.crossings.push_back(std::move(c));
        }
    }

    std::map<Point, std::size_t> crossing_at;
    for (std::size_t ci = 0; ci < scan.crossings.size(); ++ci) {
        const Crossing& c = scan.crossings[ci];
        auto [it, fresh] = crossing_at.emplace(c.point, ci);
        if (fresh) continue;
        const Crossing& o = scan.crossings[it->second];
        if (o.edge_a == c.edge_a && o.edge_b == c.edge_b) continue;
        findings.push_back({SimplicityKind::CoincidentCrossings,
                            {edges[o.edge_a].id, edges[o.edge_b].id, edges[c.edge_a].id, edges[c.edge_b].id},
                            c.point});
    }

    scan.report.ok = findings.empty();
    return scan;
}

} // namespace detail

inline SimplicityReport validate_simplicity(const Drawing& d) { return detail::scan_drawing(d).report; }

/// All crossings of a drawing satisfying property (S); Precondition error otherwise.
inline CrossingSet compute_crossings(const Drawing& d) {
    detail::Scan scan = detail::scan_drawing(d);
    if (!scan.report.ok) throw Error(ErrorCode::Precondition, "drawing violates simplicity");
    CrossingSet cs;
    cs.crossings = std::move(scan.crossings);
    cs.along_edge.assign(d.edge_count(), {});
    for (std::size_t ci = 0; ci < cs.crossings.size(); ++ci) {
        const Crossing& c = cs.crossings[ci];
        cs.by_pair.emplace(std::make_pair(c.edge_a, c.edge_b), ci);
        cs.along_edge[c.edge_a].push_back(ci);
        cs.along_edge[c.edge_b].push_back(ci);
    }
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        auto& seq = cs.along_edge[e];
        std::sort(seq.begin(), seq.end(), [&](std::size_t x, std::size_t y) {
            return cs.position_on(x, e) < cs.position_on(y, e);
        });
    }
    return cs;
}

inline nlohmann::ordered_json to_json(const SimplicityFinding& f) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(f.kind));
    j["ids"] = f.ids;
    if (f.point) j["point"] = detail::point_json(*f.point);
    return j;
}

inline nlohmann::ordered_json to_json(const SimplicityReport& r) {
    nlohmann::ordered_json j;
    j["ok"] = r.ok;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& f : r.violations) j["violations"].push_back(to_json(f));
    return j;
}

} // namespace fanplanar
