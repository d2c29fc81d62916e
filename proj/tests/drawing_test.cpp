#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fanplanar/corpus.hpp"
#include "fanplanar/drawing.hpp"
#include "support.hpp"

using namespace fanplanar;
using fanplanar::testing::build;

namespace {

ErrorCode parse_code(const std::string& doc) {
    try {
        parse_drawing(doc);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << doc;
    return ErrorCode::Io;
}

std::set<SimplicityKind> kinds(const Drawing& d) {
    std::set<SimplicityKind> out;
    for (const auto& f : validate_simplicity(d).violations) out.insert(f.kind);
    return out;
}

// Cramer's rule on straight segments, open interiors only.
std::optional<Point> solve(const Point& p, const Point& q, const Point& r, const Point& s) {
    Rational dx1 = q.x - p.x, dy1 = q.y - p.y, dx2 = s.x - r.x, dy2 = s.y - r.y;
    Rational den = dx1 * dy2 - dy1 * dx2;
    if (den == 0) return std::nullopt;
    Rational t = ((r.x - p.x) * dy2 - (r.y - p.y) * dx2) / den;
    Rational u = ((r.x - p.x) * dy1 - (r.y - p.y) * dx1) / den;
    if (t <= 0 || t >= 1 || u <= 0 || u >= 1) return std::nullopt;
    return Point{p.x + t * dx1, p.y + t * dy1};
}

const char* kMinimal = R"({"vertices":[{"id":"a","x":"0","y":"0"},{"id":"b","x":"1/2","y":"-3"}],
  "edges":[{"id":"e","source":"a","target":"b","bends":[{"x":"5","y":"5"}]}]})";

} // namespace

TEST(Parse, Minimal) {
    Drawing d = parse_drawing(kMinimal);
    ASSERT_EQ(d.vertex_count(), 2u);
    ASSERT_EQ(d.edge_count(), 1u);
    EXPECT_EQ(d.point_of("b"), (Point{Rational(1, 2), Rational(-3)}));
    EXPECT_EQ(d.chain(0).points.size(), 3u);
}

TEST(Parse, RoundTripIsStable) {
    for (const auto& name : fanplanar::testing::named_corpus()) {
        Drawing d = gen_named(name);
        std::string once = write_drawing(d);
        EXPECT_EQ(write_drawing(parse_drawing(once)), once) << name;
    }
}

TEST(Parse, ErrorCodes) {
    EXPECT_EQ(parse_code("{"), ErrorCode::Format);
    EXPECT_EQ(parse_code("[]"), ErrorCode::Format);
    EXPECT_EQ(parse_code(R"({"vertices":[]})"), ErrorCode::Format);
    EXPECT_EQ(parse_code(R"({"vertices":[],"edges":[],"extra":1})"), ErrorCode::Format);
    EXPECT_EQ(parse_code(R"({"vertices":[{"id":"a","x":0,"y":"0"}],"edges":[]})"), ErrorCode::Format);
    EXPECT_EQ(parse_code("\xEF\xBB\xBF{\"vertices\":[],\"edges\":[]}"), ErrorCode::Format);
    EXPECT_EQ(parse_code(R"({"vertices":[{"id":"a","x":"0","y":"0"},{"id":"a","x":"1","y":"0"}],"edges":[]})"),
              ErrorCode::DuplicateId);
    EXPECT_EQ(parse_code(R"({"vertices":[{"id":"a","x":"0","y":"0"}],
        "edges":[{"id":"e","source":"a","target":"z"}]})"),
              ErrorCode::UnknownVertex);
    EXPECT_EQ(parse_code(R"({"vertices":[{"id":"a","x":"0.5","y":"0"}],"edges":[]})"),
              ErrorCode::MalformedRational);
    EXPECT_EQ(parse_code(R"({"vertices":[{"id":"a","x":"1/0","y":"0"}],"edges":[]})"),
              ErrorCode::MalformedRational);
}

TEST(Parse, FormatErrorNamesLine) {
    try {
        parse_drawing("{\n\"vertices\": [\n,]}");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(Simplicity, CleanDrawingsPass) {
    EXPECT_TRUE(validate_simplicity(gen_fully_canonical(7)).ok);
    EXPECT_TRUE(validate_simplicity(fanplanar::testing::pattern_I_fixture()).ok);
}

TEST(Simplicity, EachKind) {
    using K = SimplicityKind;
    EXPECT_EQ(kinds(fanplanar::testing::double_cross_fixture()), std::set<K>{K::DoubleCross});
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {1, 0}}}, {{"e", "a", "b", {}}, {"f", "b", "a", {{0, 1}}}})),
              std::set<K>{K::MultiEdge});
    EXPECT_EQ(kinds(build({{"a", {0, 0}}}, {{"e", "a", "a", {{1, 0}, {0, 1}}}})), std::set<K>{K::SelfLoop});
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {4, 0}}, {"c", {0, 4}}},
                          {{"e", "a", "b", {{4, 4}}}, {"f", "a", "c", {{4, 0}}}})),
              (std::set<K>{K::AdjacentCross, K::EdgeThroughVertex}));
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {4, 0}}, {"c", {2, 0}}}, {{"e", "a", "b", {}}})),
              std::set<K>{K::EdgeThroughVertex});
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {4, 0}}, {"c", {2, 0}}, {"d", {2, 3}}},
                          {{"e", "a", "b", {}}, {"f", "c", "d", {}}})),
              (std::set<K>{K::Degeneracy, K::EdgeThroughVertex}));
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {4, 0}}, {"c", {2, 0}}, {"d", {6, 0}}},
                          {{"e", "a", "b", {}}, {"f", "c", "d", {}}})),
              (std::set<K>{K::Degeneracy, K::EdgeThroughVertex}));
    EXPECT_EQ(kinds(build({{"a", {-2, 0}}, {"b", {2, 0}}, {"c", {0, -2}}, {"d", {0, 2}}, {"p", {-2, -2}},
                           {"q", {2, 2}}},
                          {{"e", "a", "b", {}}, {"f", "c", "d", {}}, {"g", "p", "q", {}}})),
              std::set<K>{K::CoincidentCrossings});
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {4, 0}}}, {{"e", "a", "b", {{4, 2}, {0, 2}}}})),
              std::set<K>{K::NonSimpleChain});
    EXPECT_EQ(kinds(build({{"a", {0, 0}}, {"b", {0, 0}}}, {})), std::set<K>{K::Degeneracy});
}

TEST(Simplicity, ComputeCrossingsRequiresS) {
    try {
        compute_crossings(fanplanar::testing::double_cross_fixture());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Precondition);
    }
}

TEST(Crossings, AgreeWithPairwiseOracle) {
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed);
        Drawing d = random_candidate(rng, fanplanar::testing::random_params(seed));
        if (!validate_simplicity(d).ok) continue;
        ++compared;
        std::map<std::pair<std::size_t, std::size_t>, Point> expect;
        for (std::size_t a = 0; a < d.edge_count(); ++a)
            for (std::size_t b = a + 1; b < d.edge_count(); ++b) {
                PolyChain ca = d.chain(a), cb = d.chain(b);
                if (auto p = solve(ca.front(), ca.back(), cb.front(), cb.back())) expect.emplace(std::make_pair(a, b), *p);
            }
        CrossingSet cs = compute_crossings(d);
        ASSERT_EQ(cs.crossings.size(), expect.size()) << seed;
        for (const Crossing& c : cs.crossings) {
            auto it = expect.find({c.edge_a, c.edge_b});
            ASSERT_NE(it, expect.end());
            EXPECT_EQ(it->second, c.point);
        }
    }
    EXPECT_GE(compared, 100);
}

TEST(Crossings, OrderedAlongEachEdge) {
    Drawing d = gen_fully_canonical(9);
    CrossingSet cs = compute_crossings(d);
    // Each edge of a fully canonical drawing is crossed by exactly the two edges through the skipped vertex.
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        const auto& seq = cs.along_edge[e];
        ASSERT_EQ(seq.size(), 2u);
        for (std::size_t i = 1; i < seq.size(); ++i)
            EXPECT_LT(cs.position_on(seq[i - 1], e), cs.position_on(seq[i], e));
    }
}
