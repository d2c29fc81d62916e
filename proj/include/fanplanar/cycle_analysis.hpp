#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/drawing.hpp"
#include "fanplanar/geometry.hpp"
#include "fanplanar/intersection_graph.hpp"

namespace fanplanar {

enum class EmptySide { Bounded, Unbounded };

constexpr std::string_view to_string(EmptySide s) { return s == EmptySide::Bounded ? "BOUNDED" : "UNBOUNDED"; }

/// One position of an oriented chordless cycle. Positions are 0-based; x is the crossing
/// with the predecessor, so the base runs from x (at i) to x (at i + 1).
struct CyclePosition {
    std::size_t edge = 0; // drawing edge index
    Point x;
    std::string a; // source: a, x_i, x_{i+1}, b appear in this order along the edge
    std::string b;
    std::string v; // shared endpoint of the predecessor and the successor
    std::vector<Point> base;
    bool canonical = false;
    bool strictly_canonical = false;
    std::optional<ClosedCurve> spike; // canonical positions only
};

struct CycleGeometry {
    std::size_t k = 0;
    std::vector<CyclePosition> pos;
    ClosedCurve loop;
    EmptySide empty_side = EmptySide::Bounded;
    std::map<std::string, std::size_t> degree; // vertex degrees in G_C
    /// Geometric invariant failures found while building (loop, empty side, spikes).
    std::vector<std::string> geometric_violations;

    std::size_t wrap(long i) const {
        long m = static_cast<long>(k);
        return static_cast<std::size_t>(((i % m) + m) % m);
    }
    const CyclePosition& at(long i) const { return pos[wrap(i)]; }
    std::size_t degree_of(const std::string& v) const {
        auto it = degree.find(v);
        return it == degree.end() ? 0 : it->second;
    }
};

namespace detail {

inline ChainPosition end_position(const PolyChain& c, bool at_source) {
    return at_source ? ChainPosition{0, Rational(0)} : ChainPosition{c.links() - 1, Rational(1)};
}

inline ClosedCurve join_closed(std::initializer_list<const std::vector<Point>*> parts) {
    std::vector<Point> pts;
    for (const auto* part : parts) {
        for (const Point& p : *part)
            if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
    }
    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    return ClosedCurve{std::move(pts)};
}

/// Every vertex and bend of the given edges.
inline std::vector<Point> probe_points(const Drawing& d, const std::vector<std::size_t>& edges) {
    std::set<Point> pts;
    for (std::size_t e : edges)
        for (const Point& p : d.chain(e).points) pts.insert(p);
    return {pts.begin(), pts.end()};
}

} // namespace detail

/// Apparatus for the cycle in the given orientation (node sequence of g).
inline CycleGeometry analyze_oriented(const Drawing& d, const CrossingSet& cs, const IGraph& g,
                                      const std::vector<std::size_t>& nodes) {
    const std::size_t k = nodes.size();
    if (k < 4) throw Error(ErrorCode::Precondition, "cycle length below 4");
    std::vector<std::size_t> edges(k);
    for (std::size_t i = 0; i < k; ++i) edges[i] = g.edge_of(nodes[i]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (cs.cross(edges[i], edges[j]) != consecutive)
                throw Error(ErrorCode::NotChordless, d.edges()[edges[i]].id + " and " + d.edges()[edges[j]].id +
                                                         (consecutive ? " do not cross" : " form a chord"));
        }

    CycleGeometry geom;
    geom.k = k;
    geom.pos.resize(k);
    for (std::size_t e : edges) {
        ++geom.degree[d.edges()[e].source];
        ++geom.degree[d.edges()[e].target];
    }
    std::vector<std::size_t> xs(k); // crossing index of (e_{i-1}, e_i)
    for (std::size_t i = 0; i < k; ++i) xs[i] = *cs.between(edges[(i + k - 1) % k], edges[i]);

    for (std::size_t i = 0; i < k; ++i) {
        CyclePosition& p = geom.pos[i];
        p.edge = edges[i];
        const Edge& e = d.edges()[edges[i]];
        std::size_t xin = xs[i], xout = xs[(i + 1) % k];
        p.x = cs.crossings[xin].point;
        const ChainPosition& pin = cs.position_on(xin, p.edge);
        const ChainPosition& pout = cs.position_on(xout, p.edge);
        bool forward = pin < pout;
        p.a = forward ? e.source : e.target;
        p.b = forward ? e.target : e.source;
        p.base = subchain(d.chain(p.edge), pin, p.x, pout, cs.crossings[xout].point);
        auto v = d.shared_endpoint(edges[(i + k - 1) % k], edges[(i + 1) % k]);
        if (!v)
            throw Error(ErrorCode::NoSharedEndpoint, d.edges()[edges[(i + k - 1) % k]].id + " and " +
                                                         d.edges()[edges[(i + 1) % k]].id + " share no endpoint");
        p.v = *v;
    }
    for (std::size_t i = 0; i < k; ++i) {
        CyclePosition& p = geom.pos[i];
        p.canonical = geom.at(long(i) - 1).b == p.v && p.v == geom.at(long(i) + 1).a;
        p.strictly_canonical = p.canonical && geom.degree_of(p.v) == 2;
    }

    std::vector<Point> loop_pts;
    for (const auto& p : geom.pos) {
        for (const Point& q : p.base)
            if (loop_pts.empty() || !(loop_pts.back() == q)) loop_pts.push_back(q);
    }
    loop_pts.pop_back(); // back at x_0
    geom.loop = ClosedCurve{std::move(loop_pts)};
    if (!is_simple_closed(geom.loop)) geom.geometric_violations.push_back("loop is not a simple closed curve");

    std::vector<Point> probes = detail::probe_points(d, edges);
    bool inside = false, outside = false;
    for (const Point& q : probes) {
        Region r = point_in_region(q, geom.loop);
        inside = inside || r == Region::Inside;
        outside = outside || r == Region::Outside;
    }
    geom.empty_side = inside ? EmptySide::Unbounded : EmptySide::Bounded;
    if (inside && outside) geom.geometric_violations.push_back("both sides of the loop contain points of G_C");

    for (std::size_t i = 0; i < k; ++i) {
        CyclePosition& p = geom.pos[i];
        if (!p.canonical) continue;
        const CyclePosition& prev = geom.at(long(i) - 1);
        const CyclePosition& next = geom.at(long(i) + 1);
        PolyChain cn = d.chain(next.edge), cp = d.chain(prev.edge);
        const Edge& en = d.edges()[next.edge];
        const Edge& ep = d.edges()[prev.edge];
        const Point& pv = d.point_of(p.v);
        std::vector<Point> up = subchain(cn, cs.position_on(xs[(i + 1) % k], next.edge), next.x,
                                         detail::end_position(cn, en.source == p.v), pv);
        std::vector<Point> down =
            subchain(cp, detail::end_position(cp, ep.source == p.v), pv, cs.position_on(xs[i], prev.edge), p.x);
        p.spike = detail::join_closed({&p.base, &up, &down});
        for (const Point& q : probes)
            if (point_in_region(q, *p.spike) == Region::Inside) {
                geom.geometric_violations.push_back("spike of " + d.edges()[p.edge].id +
                                                    " contains a point of G_C");
                break;
            }
    }
    return geom;
}

/// Apparatus in the fixed orientation: least edge id first, then the smaller successor.
inline CycleGeometry analyze_cycle(const Drawing& d, const CrossingSet& cs, const IGraph& g,
                                   const ChordlessCycle& c) {
    return analyze_oriented(d, cs, g, canonical_cycle(c.nodes).nodes);
}

/// Longest cyclic run of canonical positions (k when all are canonical).
inline std::size_t consecutive_canonical_run(const CycleGeometry& geom) {
    std::size_t best = 0, run = 0;
    for (std::size_t step = 0; step < 2 * geom.k; ++step) {
        run = geom.at(long(step)).canonical ? run + 1 : 0;
        best = std::max(best, run);
    }
    return std::min(best, geom.k);
}

enum class CycleKind { Length4, FullyCanonical, NonCanonical };

constexpr std::string_view to_string(CycleKind k) {
    switch (k) {
    case CycleKind::Length4: return "LENGTH4";
    case CycleKind::FullyCanonical: return "FULLY_CANONICAL";
    case CycleKind::NonCanonical: return "NON_CANONICAL";
    }
    return "UNKNOWN";
}

struct CycleClass {
    CycleKind kind = CycleKind::Length4;
    std::optional<std::size_t> non_canonical; // position, NON_CANONICAL only
};

/// Failed clauses of the non-canonical structure; empty when all hold.
inline std::vector<std::string> structure_clauses(const CycleGeometry& geom) {
    std::vector<std::string> failed;
    const std::size_t k = geom.k;
    if (k == 4) return failed;
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < k; ++i)
        if (!geom.pos[i].canonical) bad.push_back(i);
    if (bad.empty()) return failed;
    if (bad.size() > 1) failed.push_back("more than one non-canonical edge");
    if (k < 9) failed.push_back("non-canonical cycle with k < 9");
    if (!failed.empty()) return failed;
    // Renumber so the non-canonical edge is e_k; e_m sits at position j + m.
    const long j = static_cast<long>(bad[0]);
    const long kk = static_cast<long>(k);
    auto e = [&](long m) -> const CyclePosition& { return geom.at(j + m); };
    if (e(2).v != e(kk - 2).v) failed.push_back("v_2 != v_{k-2}");
    if (!(e(1).b == e(3).a && e(3).a == e(kk - 3).b && e(kk - 3).b == e(kk - 1).a))
        failed.push_back("b_1 = a_3 = b_{k-3} = a_{k-1} fails");
    if (geom.degree_of(e(kk - 1).b) != 1) failed.push_back("b_{k-1} does not have degree one in G_C");
    if (geom.degree_of(e(1).a) != 1) failed.push_back("a_1 does not have degree one in G_C");
    return failed;
}

inline CycleClass classify_cycle(const CycleGeometry& geom) {
    if (geom.k == 4) return {CycleKind::Length4, std::nullopt};
    std::vector<std::string> failed = structure_clauses(geom);
    if (!failed.empty()) throw Error(ErrorCode::StructureViolation, failed.front());
    for (std::size_t i = 0; i < geom.k; ++i)
        if (!geom.pos[i].canonical) return {CycleKind::NonCanonical, i};
    return {CycleKind::FullyCanonical, std::nullopt};
}

inline std::optional<std::size_t> find_ground_edge(const CycleGeometry& geom) {
    for (std::size_t i = 0; i < geom.k; ++i) {
        bool ok = true;
        for (long o = -2; o <= 2 && ok; ++o) {
            const CyclePosition& p = geom.at(long(i) + o);
            ok = p.canonical && (o < -1 || o > 1 || p.strictly_canonical);
        }
        if (ok) return i;
    }
    return std::nullopt;
}

/// Least position whose two-neighbourhood is canonical and whose closed neighbourhood is
/// strictly canonical.
inline std::size_t ground_edge(const CycleGeometry& geom) {
    if (geom.k < 5) throw Error(ErrorCode::Precondition, "ground edge needs k >= 5");
    auto i = find_ground_edge(geom);
    if (!i) throw Error(ErrorCode::NoGroundEdge, "no position qualifies");
    return *i;
}

/// Vertex walk of a closed trail over `edges` in the given order, or nothing when the
/// sequence is not a closed trail (repeated edge, broken link, or open end).
inline std::optional<std::vector<std::string>> trail_walk(const Drawing& d, const std::vector<std::size_t>& edges) {
    if (edges.empty()) return std::nullopt;
    if (std::set<std::size_t>(edges.begin(), edges.end()).size() != edges.size()) return std::nullopt;
    for (const std::string* start : {&d.edges()[edges[0]].source, &d.edges()[edges[0]].target}) {
        std::vector<std::string> walk{*start};
        bool ok = true;
        for (std::size_t e : edges) {
            if (!d.has_endpoint(e, walk.back())) {
                ok = false;
                break;
            }
            walk.push_back(d.other_endpoint(e, walk.back()));
        }
        if (ok && walk.back() == walk.front()) return walk;
    }
    return std::nullopt;
}

/// Trail e_2 e_4 ... e_{k-3} e_3 e_5 ... e_{k-2} e_k of a non-canonical odd cycle, numbered
/// so the non-canonical edge is e_k. Returns drawing edge indices.
inline std::vector<std::size_t> closed_trail(const CycleGeometry& geom) {
    CycleClass cls = classify_cycle(geom);
    if (cls.kind != CycleKind::NonCanonical || geom.k % 2 == 0)
        throw Error(ErrorCode::Precondition, "closed trail needs a non-canonical odd cycle");
    const long j = static_cast<long>(*cls.non_canonical);
    const long k = static_cast<long>(geom.k);
    std::vector<std::size_t> out;
    for (long m = 2; m <= k - 3; m += 2) out.push_back(geom.at(j + m).edge);
    for (long m = 3; m <= k - 2; m += 2) out.push_back(geom.at(j + m).edge);
    out.push_back(geom.at(j + k).edge);
    return out;
}

/// Every invariant of the apparatus that applies at this length.
inline std::vector<std::string> audit_cycle(const Drawing& d, const CycleGeometry& geom) {
    std::vector<std::string> out = geom.geometric_violations;
    const long k = static_cast<long>(geom.k);
    auto name = [&](long i) { return d.edges()[geom.at(i).edge].id; };
    if (k == 4) {
        for (long i = 0; i < 2; ++i) {
            const Edge& p = d.edges()[geom.at(i).edge];
            const Edge& q = d.edges()[geom.at(i + 2).edge];
            int shared = (p.source == q.source) + (p.source == q.target) + (p.target == q.source) + (p.target == q.target);
            if (shared != 1) out.push_back("opposite edges " + name(i) + ", " + name(i + 2) + " do not share one endpoint");
        }
        return out;
    }
    for (long i = 0; i < k; ++i) {
        if (geom.at(i - 1).b == geom.at(i + 1).b) out.push_back("b_{i-1} = b_{i+1} at " + name(i));
        if (geom.at(i - 1).a == geom.at(i + 1).a) out.push_back("a_{i-1} = a_{i+1} at " + name(i));
        if (!geom.at(i).canonical && !(geom.at(i - 1).a == geom.at(i).v && geom.at(i).v == geom.at(i + 1).b))
            out.push_back("non-canonical " + name(i) + " violates a_{i-1} = v_i = b_{i+1}");
        bool run = true;
        std::set<std::string> anchors;
        for (long o = 0; o < 5; ++o) {
            run = run && geom.at(i + o).canonical;
            anchors.insert(geom.at(i + o).v);
        }
        if (run && k >= 5 && anchors.size() != 5) out.push_back("five canonical edges from " + name(i) + " repeat an anchor");
    }
    if (consecutive_canonical_run(geom) < 4) out.push_back("fewer than four consecutive canonical edges");
    for (const auto& clause : structure_clauses(geom)) out.push_back(clause);
    if (!find_ground_edge(geom)) out.push_back("no ground edge");
    return out;
}

struct LoopFinding {
    std::size_t edge = 0;
    std::string reason;
};

/// Outside edges meeting the loop must match one of three shapes: anchored at v_i of a
/// canonical base they cross once and ending on the empty side; anchored at both v_i and
/// v_j of two canonical bases whose edges share an endpoint; or anchored at v_i, leaving
/// through the non-canonical base j with i = j +- 2 and ending off the cycle.
inline std::vector<LoopFinding> loop_crossing_audit(const Drawing& d, const CrossingSet& cs,
                                                    const CycleGeometry& geom) {
    std::vector<LoopFinding> out;
    const std::size_t k = geom.k;
    if (k == 4) return out;
    std::set<std::size_t> members;
    for (const auto& p : geom.pos) members.insert(p.edge);
    auto on_empty_side = [&](const std::string& v) {
        Region r = point_in_region(d.point_of(v), geom.loop);
        return r == (geom.empty_side == EmptySide::Bounded ? Region::Inside : Region::Outside);
    };

    for (std::size_t f = 0; f < d.edge_count(); ++f) {
        if (members.count(f)) continue;
        std::vector<std::size_t> hit; // positions whose base f crosses
        for (std::size_t i = 0; i < k; ++i) {
            const CyclePosition& p = geom.pos[i];
            auto c = cs.between(f, p.edge);
            if (!c) continue;
            std::size_t xin = *cs.between(geom.at(long(i) - 1).edge, p.edge);
            std::size_t xout = *cs.between(geom.at(long(i) + 1).edge, p.edge);
            const ChainPosition& t = cs.position_on(*c, p.edge);
            const ChainPosition& lo = std::min(cs.position_on(xin, p.edge), cs.position_on(xout, p.edge));
            const ChainPosition& hi = std::max(cs.position_on(xin, p.edge), cs.position_on(xout, p.edge));
            if (lo < t && t < hi) hit.push_back(i);
        }
        if (hit.empty()) continue;
        const Edge& ef = d.edges()[f];
        auto anchored = [&](std::size_t i) { return d.has_endpoint(f, geom.pos[i].v); };
        bool ok = false;
        if (hit.size() == 1) {
            std::size_t i = hit[0];
            ok = geom.pos[i].canonical && anchored(i) && on_empty_side(d.other_endpoint(f, geom.pos[i].v));
        } else if (hit.size() == 2) {
            for (int flip = 0; flip < 2 && !ok; ++flip) {
                std::size_t i = hit[flip], j = hit[1 - flip];
                const CyclePosition& pi = geom.pos[i];
                const CyclePosition& pj = geom.pos[j];
                if (pi.canonical && pj.canonical) {
                    ok = anchored(i) && anchored(j) && pi.v != pj.v && d.share_endpoint(pi.edge, pj.edge);
                } else if (pi.canonical && !pj.canonical) {
                    bool two_apart = geom.wrap(long(j) - 2) == i || geom.wrap(long(j) + 2) == i;
                    ok = two_apart && anchored(i) && geom.degree_of(d.other_endpoint(f, pi.v)) == 0;
                }
            }
        }
        if (!ok)
            out.push_back({f, ef.id + " meets the loop at " + std::to_string(hit.size()) +
                                  " base(s) outside the permitted shapes"});
    }
    return out;
}

inline nlohmann::ordered_json cycle_report_json(const Drawing& d, const CrossingSet& cs, const CycleGeometry& geom) {
    nlohmann::ordered_json j;
    j["length"] = geom.k;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    nlohmann::ordered_json canonical = nlohmann::ordered_json::array();
    nlohmann::ordered_json anchors = nlohmann::ordered_json::array();
    for (const auto& p : geom.pos) {
        edges.push_back(d.edges()[p.edge].id);
        canonical.push_back(p.canonical);
        anchors.push_back(p.v);
    }
    std::vector<std::string> violations = audit_cycle(d, geom);
    std::string cls;
    nlohmann::ordered_json non_canonical;
    try {
        CycleClass c = classify_cycle(geom);
        cls = std::string(to_string(c.kind));
        if (c.non_canonical) non_canonical = d.edges()[geom.pos[*c.non_canonical].edge].id;
    } catch (const Error& e) {
        cls = std::string(to_string(e.code()));
    }
    nlohmann::ordered_json ground;
    if (geom.k >= 5)
        if (auto g = find_ground_edge(geom)) ground = d.edges()[geom.pos[*g].edge].id;
    for (const auto& f : loop_crossing_audit(d, cs, geom)) violations.push_back(f.reason);
    j["class"] = cls;
    j["edges"] = std::move(edges);
    j["non_canonical_edge"] = non_canonical;
    j["canonical"] = std::move(canonical);
    j["ground_edge"] = ground;
    j["anchors"] = std::move(anchors);
    j["empty_side"] = std::string(to_string(geom.empty_side));
    j["violations"] = violations;
    return j;
}

} // namespace fanplanar
