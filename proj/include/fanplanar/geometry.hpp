#pragma once

// Exact planar predicates over GMP rationals. Nothing here rounds.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanplanar/error.hpp"

namespace fanplanar {

/// Arbitrary precision rational kept in reduced form with a positive denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q" (q > 0). A leading '-' or U+2212 MINUS SIGN is accepted on p.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw Error(ErrorCode::MalformedRational, "'" + std::string(text) + "'"); };
    std::string s(text);
    bool negative = false;
    if (s.rfind("\xE2\x88\x92", 0) == 0) {
        negative = true;
        s.erase(0, 3);
    } else if (!s.empty() && s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    auto digits = [](const std::string& d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(num) || !digits(den)) fail();
    mpz_class n(num, 10), q(den, 10);
    if (q == 0) fail();
    Rational r(negative ? mpz_class(-n) : n, q);
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Point make_point(long x, long y) { return Point{Rational(x), Rational(y)}; }

struct Segment {
    Point p;
    Point q;
};

enum class Orientation { Left, Right, Collinear };

inline int cross_sign(const Point& p, const Point& q, const Point& r) {
    Rational c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(c);
}

/// Sign of (q - p) x (r - p); LEFT means counterclockwise.
inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = cross_sign(p, q, r);
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

/// Closed-segment membership.
inline bool on_segment(const Point& pt, const Segment& s) {
    if (cross_sign(s.p, s.q, pt) != 0) return false;
    return std::min(s.p.x, s.q.x) <= pt.x && pt.x <= std::max(s.p.x, s.q.x) &&
           std::min(s.p.y, s.q.y) <= pt.y && pt.y <= std::max(s.p.y, s.q.y);
}

inline bool in_relative_interior(const Point& pt, const Segment& s) {
    return on_segment(pt, s) && pt != s.p && pt != s.q;
}

/// Position of a point known to lie on the line of s, as a fraction of s (0 at p, 1 at q).
inline Rational segment_param(const Point& pt, const Segment& s) {
    if (s.q.x != s.p.x) return Rational((pt.x - s.p.x) / (s.q.x - s.p.x));
    return Rational((pt.y - s.p.y) / (s.q.y - s.p.y));
}

/// Complete classification of how two closed segments meet.
struct SegmentContact {
    enum class Kind {
        Disjoint,
        Proper,         // transversal crossing of the open segments
        SharedEndpoint, // touch exactly at an endpoint of both
        Degenerate,     // overlap, or an endpoint inside the other segment
    };
    Kind kind = Kind::Disjoint;
    Point point;
};

inline SegmentContact classify_contact(const Segment& a, const Segment& b) {
    using K = SegmentContact::Kind;
    int o1 = cross_sign(a.p, a.q, b.p);
    int o2 = cross_sign(a.p, a.q, b.q);
    int o3 = cross_sign(b.p, b.q, a.p);
    int o4 = cross_sign(b.p, b.q, a.q);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        // Intersection of the supporting lines.
        Rational dx1 = a.q.x - a.p.x, dy1 = a.q.y - a.p.y;
        Rational dx2 = b.q.x - b.p.x, dy2 = b.q.y - b.p.y;
        Rational denom = dx1 * dy2 - dy1 * dx2;
        Rational t = ((b.p.x - a.p.x) * dy2 - (b.p.y - a.p.y) * dx2) / denom;
        return {K::Proper, Point{Rational(a.p.x + t * dx1), Rational(a.p.y + t * dy1)}};
    }
    if (o1 == 0 && o2 == 0) {
        // Collinear: disjoint, touching at one shared endpoint, or overlapping.
        std::vector<Point> common;
        for (const Point& pt : {b.p, b.q})
            if (on_segment(pt, a)) common.push_back(pt);
        for (const Point& pt : {a.p, a.q})
            if (on_segment(pt, b) && std::find(common.begin(), common.end(), pt) == common.end())
                common.push_back(pt);
        if (common.empty()) return {K::Disjoint, {}};
        if (common.size() == 1) {
            const Point& c = common.front();
            bool end_a = c == a.p || c == a.q;
            bool end_b = c == b.p || c == b.q;
            return {end_a && end_b ? K::SharedEndpoint : K::Degenerate, c};
        }
        return {K::Degenerate, common.front()};
    }
    // Non-collinear with some touching.
    for (const Point& pt : {b.p, b.q}) {
        if (on_segment(pt, a)) {
            bool shared = pt == a.p || pt == a.q;
            return {shared ? K::SharedEndpoint : K::Degenerate, pt};
        }
    }
    for (const Point& pt : {a.p, a.q})
        if (on_segment(pt, b)) return {K::Degenerate, pt};
    return {K::Disjoint, {}};
}

/// Interior transversal crossing point, nothing for disjoint or shared-endpoint contact.
/// Throws Degeneracy on overlaps and endpoint-on-interior contacts.
inline std::optional<Point> proper_crossing(const Segment& s1, const Segment& s2) {
    if (s1.p == s1.q || s2.p == s2.q) throw Error(ErrorCode::Precondition, "degenerate segment");
    SegmentContact c = classify_contact(s1, s2);
    switch (c.kind) {
    case SegmentContact::Kind::Proper: return c.point;
    case SegmentContact::Kind::Degenerate:
        throw Error(ErrorCode::Degeneracy, "segments overlap or touch in a relative interior");
    default: return std::nullopt;
    }
}

/// Polygonal edge drawing: at least two points, consecutive points distinct.
struct PolyChain {
    std::vector<Point> points;

    std::size_t links() const { return points.size() < 2 ? 0 : points.size() - 1; }
    Segment link(std::size_t i) const { return {points[i], points[i + 1]}; }
    const Point& front() const { return points.front(); }
    const Point& back() const { return points.back(); }

    PolyChain reversed() const {
        PolyChain r{points};
        std::reverse(r.points.begin(), r.points.end());
        return r;
    }
};

/// Location along a chain: link index plus fraction within the link.
struct ChainPosition {
    std::size_t link = 0;
    Rational t;

    friend bool operator<(const ChainPosition& a, const ChainPosition& b) {
        if (a.link != b.link) return a.link < b.link;
        return a.t < b.t;
    }
    friend bool operator==(const ChainPosition& a, const ChainPosition& b) {
        return a.link == b.link && a.t == b.t;
    }
};

inline ChainPosition position_of(const PolyChain& c, std::size_t link, const Point& pt) {
    return {link, segment_param(pt, c.link(link))};
}

/// Locates a point on a chain (first link containing it).
inline std::optional<ChainPosition> locate_on_chain(const PolyChain& c, const Point& pt) {
    for (std::size_t i = 0; i < c.links(); ++i)
        if (on_segment(pt, c.link(i))) return position_of(c, i, pt);
    return std::nullopt;
}

struct ChainCrossing {
    Point point;
    std::size_t link1 = 0;
    std::size_t link2 = 0;
};

/// All proper crossings between two chains, ordered along c1. Contacts other than
/// proper crossings are Degeneracy unless they happen at a terminal point of both chains.
inline std::vector<ChainCrossing> chain_crossings(const PolyChain& c1, const PolyChain& c2) {
    std::vector<std::pair<ChainPosition, ChainCrossing>> found;
    auto terminal = [](const PolyChain& c, const Point& pt) { return pt == c.front() || pt == c.back(); };
    for (std::size_t i = 0; i < c1.links(); ++i) {
        for (std::size_t j = 0; j < c2.links(); ++j) {
            SegmentContact contact = classify_contact(c1.link(i), c2.link(j));
            switch (contact.kind) {
            case SegmentContact::Kind::Disjoint: break;
            case SegmentContact::Kind::Proper:
                found.push_back({position_of(c1, i, contact.point), {contact.point, i, j}});
                break;
            case SegmentContact::Kind::SharedEndpoint:
                if (terminal(c1, contact.point) && terminal(c2, contact.point)) break;
                throw Error(ErrorCode::Degeneracy, "chains touch at a bend point");
            case SegmentContact::Kind::Degenerate:
                throw Error(ErrorCode::Degeneracy, "chains overlap or touch in a link interior");
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ChainCrossing> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

/// Chain simplicity: consecutive points distinct, links meet only at shared consecutive points.
inline bool is_simple_chain(const PolyChain& c) {
    if (c.points.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        if (c.points[i] == c.points[i + 1]) return false;
    for (std::size_t i = 0; i < c.links(); ++i) {
        for (std::size_t j = i + 1; j < c.links(); ++j) {
            SegmentContact contact = classify_contact(c.link(i), c.link(j));
            if (contact.kind == SegmentContact::Kind::Disjoint) continue;
            if (j == i + 1 && contact.kind == SegmentContact::Kind::SharedEndpoint &&
                contact.point == c.points[i + 1])
                continue;
            return false;
        }
    }
    return true;
}

/// Closed polygon, implicitly closed from back() to front().
struct ClosedCurve {
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    Segment side(std::size_t i) const { return {points[i], points[(i + 1) % points.size()]}; }

    ClosedCurve reversed() const {
        ClosedCurve r{points};
        std::reverse(r.points.begin(), r.points.end());
        return r;
    }
};

inline Rational twice_signed_area(const ClosedCurve& c) {
    Rational a = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Point& p = c.points[i];
        const Point& q = c.points[(i + 1) % c.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

inline bool is_simple_closed(const ClosedCurve& c) {
    std::size_t n = c.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (c.points[i] == c.points[(i + 1) % n]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            SegmentContact contact = classify_contact(c.side(i), c.side(j));
            if (contact.kind == SegmentContact::Kind::Disjoint) continue;
            bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent && contact.kind == SegmentContact::Kind::SharedEndpoint) continue;
            return false;
        }
    }
    return twice_signed_area(c) != 0;
}

enum class Region { Inside, Outside, OnBoundary };

/// Even-odd classification. The ray leaves p along (1, 0), (1, 1), (1, 2), ... and the
/// first direction that misses every curve vertex is used, so every hit is transversal.
inline Region point_in_region(const Point& p, const ClosedCurve& boundary) {
    bool left = true, right = true, below = true, above = true;
    for (const Point& v : boundary.points) {
        left = left && p.x < v.x;
        right = right && p.x > v.x;
        below = below && p.y < v.y;
        above = above && p.y > v.y;
    }
    if (left || right || below || above) return Region::Outside;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (on_segment(p, boundary.side(i))) return Region::OnBoundary;
    Rational max_x = p.x;
    for (const Point& v : boundary.points) max_x = std::max(max_x, v.x);
    Rational reach = max_x - p.x + 1;
    for (long slope = 0;; ++slope) {
        Point dir = make_point(1, slope);
        bool hits_vertex = false;
        for (const Point& v : boundary.points) {
            if (cross_sign(p, Point{Rational(p.x + dir.x), Rational(p.y + dir.y)}, v) == 0 && v.x > p.x) {
                hits_vertex = true;
                break;
            }
        }
        if (hits_vertex) continue;
        Segment ray{p, Point{Rational(p.x + reach), Rational(p.y + reach * slope)}};
        std::size_t hits = 0;
        for (std::size_t i = 0; i < boundary.size(); ++i)
            if (classify_contact(ray, boundary.side(i)).kind == SegmentContact::Kind::Proper) ++hits;
        return hits % 2 == 1 ? Region::Inside : Region::Outside;
    }
}

/// The part of c between two positions, walked from `from` to `to` in either direction.
inline std::vector<Point> subchain(const PolyChain& c, const ChainPosition& from, const Point& from_pt,
                                   const ChainPosition& to, const Point& to_pt) {
    std::vector<Point> out;
    out.push_back(from_pt);
    if (from < to) {
        for (std::size_t k = from.link + 1; k <= to.link; ++k) out.push_back(c.points[k]);
    } else if (to < from) {
        for (std::size_t k = from.link; k > to.link; --k) out.push_back(c.points[k]);
    }
    out.push_back(to_pt);
    // A position exactly at a link end duplicates a chain point.
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace fanplanar
