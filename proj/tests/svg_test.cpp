#include <gtest/gtest.h>

#include <regex>

#include "fanplanar/coloring.hpp"
#include "fanplanar/corpus.hpp"
#include "fanplanar/svg.hpp"
#include "support.hpp"

using namespace fanplanar;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

} // namespace

TEST(Svg, ElementCounts) {
    Drawing d = gen_fully_canonical(7);
    std::string svg = render_svg(d);
    EXPECT_EQ(count(svg, "<polyline"), 7u);
    EXPECT_EQ(count(svg, "class=\"crossing\""), 7u);
    EXPECT_EQ(count(svg, "<circle"), 14u);
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Svg, ColorsFollowPalette) {
    Drawing d = gen_named("noncanonical9");
    EdgeColoring col = three_color(d);
    std::string svg = render_svg(d, col.colors);
    EXPECT_NE(svg.find("id=\"e4\" points"), std::string::npos);
    std::smatch m;
    ASSERT_TRUE(std::regex_search(svg, m, std::regex("id=\"e4\"[^>]*stroke=\"(#[0-9a-f]{6})\"")));
    EXPECT_EQ(m[1], palette_color(3));
    EXPECT_EQ(count(render_svg(d), palette_color(0)), d.edge_count());
}

TEST(Svg, Deterministic) {
    for (const auto& name : fanplanar::testing::named_corpus()) {
        Drawing d = gen_named(name);
        EXPECT_EQ(render_svg(d), render_svg(parse_drawing(write_drawing(d)))) << name;
    }
}

TEST(Svg, CoordinatesInsideCanvas) {
    std::string svg = render_svg(gen_named("fig2_right"));
    std::regex num("c[xy]=\"(-?[0-9.]+)\"");
    std::size_t seen = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator(); ++it) {
        double v = std::stod((*it)[1]);
        EXPECT_GE(v, 30.0 - 1e-9);
        EXPECT_LE(v, 570.0 + 1e-9);
        ++seen;
    }
    EXPECT_GT(seen, 0u);
}

TEST(Svg, EscapesIds) {
    Drawing d = fanplanar::testing::build({{"a<", {0, 0}}, {"b&", {1, 0}}}, {{"e\"", "a<", "b&", {}}});
    std::string svg = render_svg(d);
    EXPECT_NE(svg.find("id=\"a&lt;\""), std::string::npos);
    EXPECT_NE(svg.find("id=\"e&quot;\""), std::string::npos);
    EXPECT_EQ(render_svg(Drawing{}).find("<polyline"), std::string::npos);
}

TEST(Svg, NonSimpleDrawingOmitsMarkers) {
    std::string svg = render_svg(fanplanar::testing::double_cross_fixture());
    EXPECT_EQ(count(svg, "class=\"crossing\""), 0u);
    EXPECT_EQ(count(svg, "<polyline"), 2u);
}
