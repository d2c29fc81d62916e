#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/drawing.hpp"

namespace fanplanar {

/// Edge intersection graph. Nodes are drawing edges ordered by id, so comparing node
/// indices compares edge ids.
class IGraph {
public:
    IGraph() = default;

    /// Plain graph on n nodes named "0", "1", ... (tests and the coloring oracle).
    explicit IGraph(std::size_t n) : adj_(n) {
        for (std::size_t i = 0; i < n; ++i) {
            edge_of_.push_back(i);
            ids_.push_back(std::to_string(i));
        }
    }

    void connect(std::size_t u, std::size_t v) {
        if (u == v) return;
        if (!adjacent(u, v)) {
            adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
            adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
        }
    }

    std::size_t size() const { return adj_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }
    const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t adjacency_count() const {
        std::size_t s = 0;
        for (const auto& a : adj_) s += a.size();
        return s / 2;
    }

    /// Drawing edge index of a node.
    std::size_t edge_of(std::size_t node) const { return edge_of_[node]; }
    std::optional<std::size_t> node_of(std::size_t edge) const {
        for (std::size_t i = 0; i < edge_of_.size(); ++i)
            if (edge_of_[i] == edge) return i;
        return std::nullopt;
    }
    const std::string& id(std::size_t node) const { return ids_[node]; }

    std::optional<std::size_t> node_by_id(const std::string& id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) return std::nullopt;
        return static_cast<std::size_t>(it - ids_.begin());
    }

    friend IGraph build_igraph(const Drawing& d, const CrossingSet& cs);

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> edge_of_;
    std::vector<std::string> ids_;
};

inline IGraph build_igraph(const Drawing& d, const CrossingSet& cs) {
    IGraph g;
    std::vector<std::size_t> order(d.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d.edges()[a].id < d.edges()[b].id; });
    std::vector<std::size_t> node_of_edge(d.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        g.edge_of_.push_back(order[i]);
        g.ids_.push_back(d.edges()[order[i]].id);
        node_of_edge[order[i]] = i;
    }
    g.adj_.assign(order.size(), {});
    for (const Crossing& c : cs.crossings) g.connect(node_of_edge[c.edge_a], node_of_edge[c.edge_b]);
    return g;
}

/// Cyclic node sequence in canonical form: least node first, then the smaller neighbour.
struct ChordlessCycle {
    std::vector<std::size_t> nodes;

    std::size_t length() const { return nodes.size(); }
    bool contains(std::size_t node) const { return std::find(nodes.begin(), nodes.end(), node) != nodes.end(); }

    friend bool operator<(const ChordlessCycle& a, const ChordlessCycle& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
        return a.nodes < b.nodes;
    }
    friend bool operator==(const ChordlessCycle& a, const ChordlessCycle& b) { return a.nodes == b.nodes; }
};

/// Least rotation/reflection of a cyclic sequence.
inline ChordlessCycle canonical_cycle(std::vector<std::size_t> nodes) {
    if (nodes.empty()) return {};
    auto start = std::min_element(nodes.begin(), nodes.end());
    std::rotate(nodes.begin(), start, nodes.end());
    if (nodes.size() > 2 && nodes.back() < nodes[1]) std::reverse(nodes.begin() + 1, nodes.end());
    return {std::move(nodes)};
}

enum class Parity { Any, Odd, Even };

struct EnumerationOptions {
    std::size_t min_len = 4;
    std::optional<std::size_t> max_len;
    Parity parity = Parity::Any;
    std::optional<std::size_t> cap;
};

namespace detail {

struct ChordlessSearch {
    const IGraph& g;
    const EnumerationOptions& opt;
    std::vector<std::size_t> path;
    std::vector<char> on_path;
    std::vector<int> blocked; // number of path nodes (excluding the tip) adjacent to a node
    std::vector<ChordlessCycle> out;

    bool wanted(std::size_t len) const {
        if (len < opt.min_len) return false;
        if (opt.max_len && len > *opt.max_len) return false;
        if (opt.parity == Parity::Odd && len % 2 == 0) return false;
        if (opt.parity == Parity::Even && len % 2 == 1) return false;
        return true;
    }

    void emit(std::size_t closing) {
        std::size_t len = path.size() + 1;
        if (!wanted(len)) return;
        if (opt.cap && out.size() >= *opt.cap)
            throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(*opt.cap) + " chordless cycles");
        std::vector<std::size_t> nodes(path);
        nodes.push_back(closing);
        out.push_back({std::move(nodes)});
    }

    void block(std::size_t u, int delta) {
        for (std::size_t w : g.neighbors(u)) blocked[w] += delta;
    }

    // Invariant: path[0] = s is the least node; blocked[] counts adjacency to path[1..tip-1].
    void extend(std::size_t s) {
        std::size_t tip = path.back();
        for (std::size_t w : g.neighbors(tip)) {
            if (w <= s || on_path[w] || blocked[w] > 0) continue;
            bool closes = path.size() >= 2 && g.adjacent(w, s);
            if (closes) {
                if (path[1] < w) emit(w);
                continue;
            }
            if (opt.max_len && path.size() + 1 >= *opt.max_len) continue;
            if (path.size() >= 2) block(tip, +1);
            path.push_back(w);
            on_path[w] = 1;
            extend(s);
            on_path[w] = 0;
            path.pop_back();
            if (path.size() >= 2) block(tip, -1);
        }
    }
};

} // namespace detail

/// Every chordless cycle within the bounds, each once in canonical form, sorted by
/// (length, nodes). Cycles of length three are never reported here.
inline std::vector<ChordlessCycle> enumerate_chordless_cycles(const IGraph& g, const EnumerationOptions& opt = {}) {
    if (opt.min_len < 4) throw Error(ErrorCode::Precondition, "min_len must be at least 4");
    detail::ChordlessSearch search{g, opt, {}, std::vector<char>(g.size(), 0), std::vector<int>(g.size(), 0), {}};
    for (std::size_t s = 0; s < g.size(); ++s) {
        search.path = {s};
        search.on_path[s] = 1;
        // s itself is excluded through w > s; its neighbours other than path[1] are
        // handled by the closing test.
        search.extend(s);
        search.on_path[s] = 0;
    }
    std::sort(search.out.begin(), search.out.end());
    return search.out;
}

/// Triangles (u < v < w), reported separately from the chordless enumeration.
inline std::vector<std::array<std::size_t, 3>> find_triangles(const IGraph& g) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v : g.neighbors(u)) {
            if (v <= u) continue;
            for (std::size_t w : g.neighbors(v))
                if (w > v && g.adjacent(u, w)) out.push_back({u, v, w});
        }
    return out;
}

struct TwoColoring {
    /// Node colors 1/2, 0 for removed nodes; empty when an odd cycle was found.
    std::vector<int> colors;
    /// Closed odd cycle (node sequence) when the graph is not bipartite.
    std::vector<std::size_t> odd_cycle;

    bool bipartite() const { return odd_cycle.empty(); }
};

/// BFS 2-coloring of g minus `removed`: components in node order, first node gets color 1.
inline TwoColoring bipartite_2coloring(const IGraph& g, const std::set<std::size_t>& removed = {}) {
    TwoColoring result;
    std::vector<int> color(g.size(), 0);
    std::vector<std::size_t> parent(g.size(), SIZE_MAX);
    std::vector<std::size_t> depth(g.size(), 0);
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (removed.count(root) || color[root] != 0) continue;
        color[root] = 1;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w : g.neighbors(u)) {
                if (removed.count(w)) continue;
                if (color[w] == 0) {
                    color[w] = 3 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Tree paths to the common ancestor plus edge (u, w) close an odd cycle.
                    std::vector<std::size_t> left{u}, right{w};
                    std::size_t a = u, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    result.odd_cycle = std::move(left);
                    return result;
                }
            }
        }
    }
    result.colors = std::move(color);
    return result;
}

namespace detail {

inline bool color_backtrack(const IGraph& g, const std::vector<std::size_t>& order, std::size_t at,
                            std::size_t k, std::vector<int>& color) {
    if (at == order.size()) return true;
    std::size_t u = order[at];
    int used_max = 0;
    for (std::size_t i = 0; i < at; ++i) used_max = std::max(used_max, color[order[i]]);
    // Symmetry breaking: a fresh color is only ever the next unused one.
    int limit = std::min<int>(static_cast<int>(k), used_max + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (std::size_t w : g.neighbors(u))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[u] = c;
        if (color_backtrack(g, order, at + 1, k, color)) return true;
        color[u] = 0;
    }
    return false;
}

} // namespace detail

/// Exact chromatic number by exhaustive backtracking. Independent of the coloring module.
inline std::size_t chromatic_number_bruteforce(const IGraph& g, std::size_t node_limit = 24) {
    if (g.size() > node_limit)
        throw Error(ErrorCode::TooLarge, std::to_string(g.size()) + " nodes exceed limit " + std::to_string(node_limit));
    if (g.size() == 0) return 0;
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.neighbors(a).size() > g.neighbors(b).size(); });
    for (std::size_t k = 1;; ++k) {
        std::vector<int> color(g.size(), 0);
        if (detail::color_backtrack(g, order, 0, k, color)) return k;
    }
}

inline nlohmann::ordered_json census_json(const IGraph& g, const std::vector<ChordlessCycle>& cycles) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : cycles) {
        nlohmann::ordered_json j;
        j["length"] = c.length();
        nlohmann::ordered_json ids = nlohmann::ordered_json::array();
        for (std::size_t n : c.nodes) ids.push_back(g.id(n));
        j["edges"] = std::move(ids);
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace fanplanar
