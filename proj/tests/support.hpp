#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fanplanar/corpus.hpp"
#include "fanplanar/cycle_analysis.hpp"
#include "fanplanar/drawing.hpp"

namespace fanplanar::testing {

struct PathSpec {
    std::string id;
    std::string source;
    std::string target;
    std::vector<std::pair<long, long>> bends;
};

inline Drawing build(const std::vector<std::pair<std::string, std::pair<long, long>>>& vertices,
                     const std::vector<PathSpec>& edges) {
    Drawing d;
    for (const auto& [id, xy] : vertices) d.add_vertex({id, make_point(xy.first, xy.second)});
    for (const auto& e : edges) {
        Edge out{e.id, e.source, e.target, {}};
        for (const auto& [x, y] : e.bends) out.bends.push_back(make_point(x, y));
        d.add_edge(std::move(out));
    }
    return d;
}

/// e is crossed by f and g, which share no endpoint.
inline Drawing pattern_I_fixture() {
    return build({{"a", {0, 0}}, {"b", {10, 0}}, {"p", {2, -2}}, {"q", {2, 2}}, {"r", {6, -2}}, {"s", {6, 2}}},
                 {{"e", "a", "b", {}}, {"f", "p", "q", {}}, {"g", "r", "s", {}}});
}

/// f and g leave w; g wraps around b, so the cell of e, f, g holds b only.
inline Drawing pattern_II_fixture() {
    return build({{"a", {-10, 0}}, {"b", {10, 0}}, {"w", {0, 5}}, {"u", {-3, -5}}, {"t", {5, 3}}},
                 {{"e", "a", "b", {}}, {"f", "w", "u", {}}, {"g", "w", "t", {{20, 5}, {20, -5}, {5, -5}}}});
}

/// Both f and g wrap, so the cell holds a and b.
inline Drawing pattern_III_fixture() {
    return build({{"a", {-10, 0}}, {"b", {10, 0}}, {"w", {0, 5}}, {"u", {-5, 3}}, {"t", {5, 3}}},
                 {{"e", "a", "b", {}},
                  {"f", "w", "u", {{-20, 5}, {-20, -5}, {-5, -5}}},
                  {"g", "w", "t", {{20, 5}, {20, -5}, {5, -5}}}});
}

inline Drawing double_cross_fixture() {
    return build({{"a", {0, 0}}, {"b", {10, 0}}, {"p", {2, -2}}, {"q", {6, -2}}},
                 {{"e", "a", "b", {}}, {"f", "p", "q", {{4, 2}}}});
}

/// Fully canonical 5-cycle plus an edge from a fresh outside vertex that stabs one base and
/// ends inside the loop. Violates pattern I; the 5-cycle stays chordless.
inline Drawing loop_stab_fixture() {
    Drawing d = gen_fully_canonical(5);
    // e0 joins v0 and v2; its base lies between the crossings with e3 and e1.
    d.add_vertex({"out", Point{Rational(0), Rational(-3)}});
    d.add_vertex({"in", Point{Rational(0), Rational(0)}});
    d.add_edge({"stab", "out", "in", {}});
    return d;
}

/// Every position qualifying as a ground edge, not only the least one.
inline std::vector<std::size_t> ground_candidates(const CycleGeometry& geom) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < geom.k; ++i) {
        bool ok = true;
        for (long o = -2; o <= 2 && ok; ++o) {
            const CyclePosition& p = geom.at(long(i) + o);
            ok = p.canonical && (o == -2 || o == 2 || p.strictly_canonical);
        }
        if (ok) out.push_back(i);
    }
    return out;
}

inline std::vector<std::string> named_corpus() {
    std::vector<std::string> out;
    for (auto n : kNamedDrawings) out.emplace_back(n);
    return out;
}

/// Parameters of the seeded random corpus; the straight-line family accepts nearly every seed.
inline GenParams random_params(std::uint64_t seed) {
    GenParams p;
    p.seed = seed;
    p.vertices = 8;
    p.edges = 10;
    p.bends = 0;
    p.bound = 20;
    p.attempts = 100;
    return p;
}

} // namespace fanplanar::testing
