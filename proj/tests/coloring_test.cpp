#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "fanplanar/coloring.hpp"
#include "fanplanar/corpus.hpp"
#include "support.hpp"

using namespace fanplanar;
namespace t = fanplanar::testing;

namespace {

std::vector<Drawing> corpus() {
    std::vector<Drawing> out;
    for (const auto& name : t::named_corpus()) out.push_back(gen_named(name));
    for (int k = 5; k <= 12; ++k) out.push_back(gen_fully_canonical(k));
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        if (auto d = gen_random(t::random_params(seed))) out.push_back(std::move(*d));
    return out;
}

// Recursive 2-coloring of the crossing graph with the `skip` edges removed.
bool two_colorable(const Drawing& d, const CrossingSet& cs, const std::set<std::size_t>& skip) {
    std::vector<int> side(d.edge_count(), 0);
    std::function<bool(std::size_t, int)> paint = [&](std::size_t e, int s) {
        side[e] = s;
        for (std::size_t f = 0; f < d.edge_count(); ++f) {
            if (skip.count(f) || !cs.cross(e, f)) continue;
            if (side[f] == s) return false;
            if (side[f] == 0 && !paint(f, -s)) return false;
        }
        return true;
    };
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        if (!skip.count(e) && side[e] == 0 && !paint(e, 1)) return false;
    return true;
}

} // namespace

TEST(ThreeColor, CorpusColoringsAreProper) {
    for (const Drawing& d : corpus()) {
        EdgeColoring col = three_color(d);
        EXPECT_TRUE(verify_coloring(d, col).empty());
        EXPECT_EQ(col.colors.size(), d.edge_count());
        EXPECT_LE(col.colors_used, 3);
        CrossingSet cs = compute_crossings(d);
        std::set<std::size_t> none;
        if (two_colorable(d, cs, none)) {
            EXPECT_LE(col.colors_used, 2);
        }
        // Ground set: independent, and its removal leaves a bipartite remainder.
        for (std::size_t a : col.ground.edges)
            for (std::size_t b : col.ground.edges) EXPECT_FALSE(cs.cross(a, b));
        EXPECT_TRUE(two_colorable(d, cs, col.ground.edges));
        for (const auto& [id, c] : col.colors)
            EXPECT_EQ(c == 3, col.ground.edges.count(*d.find_edge(id)) == 1) << id;
    }
}

TEST(ThreeColor, FrozenGroundSets) {
    auto ground = [](const char* name) {
        Drawing d = gen_named(name);
        auto j = coloring_json(d, three_color(d), {});
        return j["ground"].get<std::vector<std::string>>();
    };
    EXPECT_EQ(ground("noncanonical9"), std::vector<std::string>{"e4"});
    EXPECT_EQ(ground("noncanonical11"), std::vector<std::string>{"e7"});
    EXPECT_EQ(ground("fig2_right"), (std::vector<std::string>{"Be4", "Ce4", "d0"}));
    EXPECT_EQ(ground("fig2_left"), (std::vector<std::string>{"Ae4", "Be4", "Ce4", "De4", "Ee4", "d0"}));
    EXPECT_TRUE(ground("k33").empty());
}

TEST(ThreeColor, ParityOfFullyCanonical) {
    for (int k = 5; k <= 25; ++k) EXPECT_EQ(three_color(gen_fully_canonical(k)).colors_used, k % 2 ? 3 : 2) << k;
}

TEST(ThreeColor, CrossingFreeUsesOneColor) {
    Drawing d = t::build({{"a", {0, 0}}, {"b", {1, 0}}, {"c", {0, 1}}}, {{"x", "a", "b", {}}, {"y", "a", "c", {}}});
    EdgeColoring col = three_color(d);
    EXPECT_EQ(col.colors_used, 1);
    EXPECT_EQ(planar_layers(d, col).size(), 1u);
    EXPECT_EQ(three_color(Drawing{}).colors_used, 0);
}

TEST(ThreeColor, RefusesNonFanPlanar) {
    for (const Drawing& d : {t::pattern_I_fixture(), t::pattern_II_fixture(), t::pattern_III_fixture()}) {
        try {
            three_color(d);
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotFanPlanar);
        }
    }
}

TEST(Verify, ReportsConflictsAndMissing) {
    Drawing d = gen_fully_canonical(6);
    std::map<std::string, int> colors;
    for (const Edge& e : d.edges()) colors[e.id] = 1;
    EXPECT_EQ(verify_coloring(d, colors).size(), 6u);
    colors.erase("e0");
    try {
        verify_coloring(d, colors);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingEdge);
    }
}

TEST(Layers, CrossingFreeAndPartition) {
    for (const char* name : {"fig2_right", "noncanonical11", "k33"}) {
        Drawing d = gen_named(name);
        EdgeColoring col = three_color(d);
        auto layers = planar_layers(d, col);
        EXPECT_EQ(layers.size(), std::size_t(col.colors_used));
        std::size_t total = 0;
        for (const Layer& l : layers) {
            EXPECT_TRUE(compute_crossings(l.drawing).crossings.empty());
            for (const Edge& e : l.drawing.edges()) EXPECT_EQ(col.colors.at(e.id), l.color);
            total += l.drawing.edge_count();
        }
        EXPECT_EQ(total, d.edge_count());
    }
}

TEST(Layers, RejectImproperColoring) {
    Drawing d = gen_fully_canonical(6);
    EdgeColoring col;
    for (const Edge& e : d.edges()) col.colors[e.id] = 1;
    col.colors_used = 1;
    EXPECT_THROW(planar_layers(d, col), Error);
}

// If the ground edges of two odd chordless cycles cross, each lies on the other cycle.
// Checked for every qualifying ground position, so crossing pairs actually occur.
TEST(KeyLemma, BruteForceOverCyclePairs) {
    std::size_t crossing = 0;
    for (const Drawing& d : corpus()) {
        CrossingSet cs = compute_crossings(d);
        IGraph g = build_igraph(d, cs);
        EnumerationOptions opt;
        opt.min_len = 5;
        opt.parity = Parity::Odd;
        auto cycles = enumerate_chordless_cycles(g, opt);
        if (cycles.size() > 200) continue;
        std::vector<std::vector<std::size_t>> ground;
        for (const auto& c : cycles) {
            CycleGeometry geom = analyze_cycle(d, cs, g, c);
            ASSERT_FALSE(t::ground_candidates(geom).empty());
            EXPECT_EQ(t::ground_candidates(geom).front(), ground_edge(geom));
            ground.emplace_back();
            for (std::size_t i : t::ground_candidates(geom)) ground.back().push_back(*g.node_of(geom.pos[i].edge));
        }
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j)
                for (std::size_t a : ground[i])
                    for (std::size_t b : ground[j]) {
                        if (!g.adjacent(a, b)) continue;
                        ++crossing;
                        EXPECT_TRUE(cycles[j].contains(a) && cycles[i].contains(b)) << g.id(a) << " " << g.id(b);
                    }
    }
    EXPECT_GT(crossing, 100u);
}

TEST(Json, Shape) {
    Drawing d = gen_named("noncanonical9");
    EdgeColoring col = three_color(d);
    auto j = coloring_json(d, col, planar_layers(d, col));
    EXPECT_EQ(j["colors_used"], 3);
    EXPECT_EQ(j["colors"].size(), d.edge_count());
    EXPECT_EQ(j["layers"].size(), 3u);
    EXPECT_EQ(j["layers"][2], std::vector<std::string>{"e4"});
}
