#include <gtest/gtest.h>

#include <cstdlib>

#include "fanplanar/corpus.hpp"
#include "fanplanar/fanplanarity.hpp"
#include "support.hpp"

using namespace fanplanar;
namespace t = fanplanar::testing;

TEST(Rng, TestVectors) {
    struct Vector {
        std::uint64_t seed;
        std::array<std::uint64_t, 4> out;
    };
    const Vector vectors[] = {
        {0, {0x7bbcb40d550682d0, 0xde7fe413d00cc9fd, 0xb3c638353c668c91, 0xe073afc0949195fc}},
        {1, {0x4b46a55df3611b9b, 0xd7e1f1410e763ef4, 0x5f14ec66975f9b06, 0x3b2c74fad44d6cdb}},
        {42, {0x31b0ece7c4f697a2, 0x9008a3b1cb686f03, 0x7c7173abd97be16f, 0x45672c8c8d6b8c4f}},
    };
    for (const auto& v : vectors) {
        Rng rng(v.seed);
        for (std::uint64_t want : v.out) EXPECT_EQ(rng.next(), want) << v.seed;
    }
}

TEST(Rng, BoundedDraws) {
    Rng rng(9);
    std::array<int, 7> hist{};
    for (int i = 0; i < 7000; ++i) {
        std::uint64_t r = rng.below(7);
        ASSERT_LT(r, 7u);
        ++hist[r];
    }
    for (int h : hist) EXPECT_GT(h, 850);
    for (int i = 0; i < 1000; ++i) {
        long x = rng.between(-3, 3);
        EXPECT_GE(x, -3);
        EXPECT_LE(x, 3);
    }
}

TEST(Fnv, TestVectors) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325u);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cu);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8u);
}

TEST(Named, ContentHashesPinned) {
    const std::pair<const char*, std::uint64_t> pins[] = {
        {"fig2_left", 0x0f41872aac1b3a1f},      {"fig2_right", 0x4e2930ab80baaa83},
        {"fig5a", 0xf9e5062dfa9d9ed4},          {"k33", 0x2bbc46b5ea89e7be},
        {"noncanonical11", 0x45aa11bf011d6ed9}, {"noncanonical9", 0x6b0862df7bb0c99b},
    };
    for (const auto& [name, hash] : pins) EXPECT_EQ(fnv1a64(read_file(named_path(name))), hash) << name;
}

TEST(Named, UnknownName) {
    try {
        named_path("fig9");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownName);
    }
}

TEST(Named, MissingFileIsIo) {
    try {
        read_file("/nonexistent/drawing.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

TEST(FullyCanonical, Shape) {
    EXPECT_THROW(gen_fully_canonical(4), Error);
    try {
        gen_fully_canonical(3);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::KTooSmall);
    }
    for (int k = 5; k <= 25; ++k) {
        Drawing d = gen_fully_canonical(k);
        EXPECT_EQ(d.vertex_count(), std::size_t(k));
        EXPECT_EQ(d.edge_count(), std::size_t(k));
        // Every corner lies exactly on the unit circle.
        for (const Vertex& v : d.vertices()) EXPECT_EQ(v.pos.x * v.pos.x + v.pos.y * v.pos.y, 1);
        EXPECT_EQ(compute_crossings(d).crossings.size(), std::size_t(k));
        EXPECT_EQ(write_drawing(d), write_drawing(gen_fully_canonical(k)));
    }
}

TEST(Random, DeterministicPerSeed) {
    for (std::uint64_t seed : {1u, 2u, 77u}) {
        auto a = gen_random(t::random_params(seed));
        auto b = gen_random(t::random_params(seed));
        ASSERT_TRUE(a && b);
        EXPECT_EQ(write_drawing(*a), write_drawing(*b));
        EXPECT_TRUE(fan_report(*a).strongly_fan_planar);
    }
    EXPECT_NE(write_drawing(*gen_random(t::random_params(1))), write_drawing(*gen_random(t::random_params(2))));
}

TEST(Random, CandidateRespectsParameters) {
    GenParams p;
    p.vertices = 9;
    p.edges = 12;
    p.bends = 2;
    p.bound = 30;
    Rng rng(4);
    Drawing d = random_candidate(rng, p);
    EXPECT_EQ(d.vertex_count(), 9u);
    EXPECT_EQ(d.edge_count(), 12u);
    for (const Edge& e : d.edges()) {
        EXPECT_LE(e.bends.size(), 2u);
        EXPECT_NE(e.source, e.target);
    }
    for (const Vertex& v : d.vertices()) {
        EXPECT_GE(v.pos.x, 0);
        EXPECT_LE(v.pos.x, 30);
    }
}

TEST(Random, RejectsImpossibleParameters) {
    Rng rng(1);
    GenParams p;
    p.vertices = 3;
    p.edges = 4;
    EXPECT_THROW(random_candidate(rng, p), Error);
    p.edges = 2;
    p.bound = 0;
    EXPECT_THROW(random_candidate(rng, p), Error);
}

TEST(Random, AcceptanceRate) {
    int accepted = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) accepted += gen_random(t::random_params(seed)).has_value();
    EXPECT_GE(accepted, 95);
}
