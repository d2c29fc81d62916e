#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fanplanar/drawing.hpp"
#include "fanplanar/fanplanarity.hpp"

#ifndef FANPLANAR_CORPUS_DIR
#define FANPLANAR_CORPUS_DIR "data/corpus/v1"
#endif

namespace fanplanar {

inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xorshift64* with the state seeded by one splitmix64 step; a zero state is replaced.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        state_ = splitmix64(s);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, n), by rejection of the biased top range.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error(ErrorCode::Precondition, "empty range");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t r = next();
            if (r < limit) return r % n;
        }
    }

    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Corners of a convex k-gon on the unit circle, every other corner joined.
inline Drawing gen_fully_canonical(int k) {
    if (k < 5) throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " is below 5");
    const double pi = std::acos(-1.0);
    Drawing d;
    for (int i = 0; i < k; ++i) {
        long long t1000 = std::llround(std::tan(-pi / 2 + pi * (i + 0.5) / k) * 1000.0);
        Rational t(static_cast<long>(t1000), 1000L);
        t.canonicalize();
        Rational den = 1 + t * t;
        d.add_vertex({"v" + std::to_string(i), Point{Rational((1 - t * t) / den), Rational(2 * t / den)}});
    }
    for (int i = 0; i < k; ++i)
        d.add_edge({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string((i + 2) % k), {}});
    return d;
}

inline constexpr std::array<std::string_view, 6> kNamedDrawings = {"fig5a", "fig2_left", "fig2_right",
                                                                   "k33", "noncanonical9", "noncanonical11"};

/// Directory of the checked-in corpus; FANPLANAR_CORPUS overrides the build-time default.
inline std::string corpus_dir() {
    if (const char* env = std::getenv("FANPLANAR_CORPUS"); env && *env) return env;
    return FANPLANAR_CORPUS_DIR;
}

inline std::string named_path(std::string_view name) {
    bool known = false;
    for (auto n : kNamedDrawings) known = known || n == name;
    if (!known) throw Error(ErrorCode::UnknownName, "no corpus drawing named '" + std::string(name) + "'");
    return corpus_dir() + "/" + std::string(name) + ".json";
}

/// Loads a named corpus file; only strongly fan-planar files are accepted.
inline Drawing gen_named(std::string_view name) {
    Drawing d = parse_drawing(read_file(named_path(name)));
    if (!fan_report(d).strongly_fan_planar)
        throw Error(ErrorCode::NotFanPlanar, "corpus drawing " + std::string(name) + " fails validation");
    return d;
}

struct GenParams {
    std::uint64_t seed = 0;
    int vertices = 6;
    int edges = 6;
    int bends = 0;  // per edge, at most
    long bound = 20; // coordinates in [0, bound]
    int attempts = 100;
};

/// One unfiltered candidate: distinct integer points, distinct vertex pairs, random bends.
inline Drawing random_candidate(Rng& rng, const GenParams& p) {
    if (p.vertices <= 0 || p.edges < 0 || p.bends < 0 || p.bound <= 0)
        throw Error(ErrorCode::Precondition, "generator parameters out of range");
    long side = p.bound + 1;
    if (static_cast<double>(side) * static_cast<double>(side) < p.vertices)
        throw Error(ErrorCode::Precondition, "bound too small for the vertex count");
    long pairs = static_cast<long>(p.vertices) * (p.vertices - 1) / 2;
    if (p.edges > pairs) throw Error(ErrorCode::Precondition, "more edges than vertex pairs");
    Drawing d;
    std::set<std::pair<long, long>> used;
    while (static_cast<int>(d.vertex_count()) < p.vertices) {
        long x = rng.between(0, p.bound), y = rng.between(0, p.bound);
        if (!used.insert({x, y}).second) continue;
        d.add_vertex({"v" + std::to_string(d.vertex_count()), make_point(x, y)});
    }
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(d.edge_count()) < p.edges) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.vertices)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.vertices)));
        if (a == b || !chosen.insert(std::minmax(a, b)).second) continue;
        Edge e{"e" + std::to_string(d.edge_count()), "v" + std::to_string(a), "v" + std::to_string(b), {}};
        int nb = p.bends == 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(p.bends) + 1));
        for (int i = 0; i < nb; ++i) e.bends.push_back(make_point(rng.between(0, p.bound), rng.between(0, p.bound)));
        d.add_edge(std::move(e));
    }
    return d;
}

/// First candidate passing fan_report within the attempt budget. Fully determined by seed.
inline std::optional<Drawing> gen_random(const GenParams& p) {
    Rng rng(p.seed);
    for (int attempt = 0; attempt < p.attempts; ++attempt) {
        Drawing d = random_candidate(rng, p);
        if (fan_report(d).strongly_fan_planar) return d;
    }
    return std::nullopt;
}

} // namespace fanplanar
