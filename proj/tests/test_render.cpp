#include <fibward/render.hpp>

#include <gtest/gtest.h>

#include <regex>

using namespace fibward;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t point_pairs(const std::string& element) {
  const auto start = element.find("points=\"");
  const auto stop = element.find('"', start + 8);
  const std::string pts = element.substr(start + 8, stop - start - 8);
  return static_cast<std::size_t>(std::count(pts.begin(), pts.end(), ',')) ;
}

}  // namespace

TEST(Svg, FileName) { EXPECT_EQ(svg_file_name("curve", 2, 10), "curve_2_10.svg"); }

TEST(Svg, DocumentFrame) {
  SvgDocument doc({0, 0}, {2, 3}, 10);
  EXPECT_EQ(doc.width(), 40);
  EXPECT_EQ(doc.height(), 50);
  const std::string s = doc.str();
  EXPECT_NE(s.find("viewBox=\"-10 -40 40 50\""), std::string::npos);
  EXPECT_NE(s.find("<g transform=\"scale(1,-1)\">"), std::string::npos);
  EXPECT_EQ(s.find("<defs>"), std::string::npos);
  EXPECT_THROW(SvgDocument({0, 0}, {1, 1}, 0), std::invalid_argument);
}

TEST(RenderCurve, ClassicTenthWord) {
  const Curve c = odd_even_draw(classic_fib_word(10));
  const SvgDocument doc = render_curve(c);
  ASSERT_EQ(doc.elements().size(), 1u);
  EXPECT_EQ(point_pairs(doc.elements()[0]), 90u);
}

TEST(RenderCurve, PointsMatchPath) {
  const Curve c = fractal_curve(8, 3);
  const SvgDocument doc = render_curve(c, 3);
  ASSERT_EQ(doc.elements().size(), 1u);
  EXPECT_EQ(point_pairs(doc.elements()[0]), c.path.size());
  EXPECT_NE(doc.elements()[0].find(doc.points_attribute(c.path.points())), std::string::npos);
}

TEST(RenderCurve, EmptyWordHasNoPolyline) {
  EXPECT_TRUE(render_curve(odd_even_draw(BinaryWord{})).elements().empty());
}

TEST(RenderPolyomino, CornerCounts) {
  const SvgDocument plus = render_polyomino(build_polyomino(boundary_word(1, 2)));
  ASSERT_EQ(plus.elements().size(), 1u);
  EXPECT_EQ(point_pairs(plus.elements()[0]), 12u);
  const SvgDocument square = render_polyomino(build_polyomino(PathWord::parse("0123")));
  EXPECT_EQ(point_pairs(square.elements()[0]), 4u);
  const SvgDocument domino = render_polyomino(build_polyomino(PathWord::parse("001223")));
  EXPECT_EQ(point_pairs(domino.elements()[0]), 4u);
}

TEST(RenderPolyomino, GridAddsOneRectPerCell) {
  const Polyomino p = build_polyomino(boundary_word(2, 2));
  const std::string s = render_polyomino(p, 4, true).str();
  EXPECT_EQ(count_of(s, "<rect "), p.area());
  EXPECT_EQ(count_of(s, "<polygon "), 1u);
}

TEST(RenderPolyomino, PointsInsideViewBox) {
  const Polyomino p = build_polyomino(boundary_word(2, 3));
  const int scale = 5;
  const SvgDocument doc = render_polyomino(p, scale);
  const std::string s = doc.str();
  std::smatch m;
  ASSERT_TRUE(std::regex_search(s, m, std::regex("viewBox=\"(-?\\d+) (-?\\d+) (\\d+) (\\d+)\"")));
  const long vx = std::stol(m[1]), vy = std::stol(m[2]), vw = std::stol(m[3]), vh = std::stol(m[4]);
  const LatticePath path = trace(p.boundary, p.start);
  for (Point q : path.points()) {
    const long x = q.x * scale, y = -q.y * scale;  // after the y flip
    EXPECT_GT(x, vx);
    EXPECT_LT(x, vx + vw);
    EXPECT_GT(y, vy);
    EXPECT_LT(y, vy + vh);
  }
}

TEST(RenderTiling, UsesOneTileDefinition) {
  const Polyomino p = build_polyomino(boundary_word(1, 2));
  const auto certs = certify_all(p);
  ASSERT_FALSE(certs.empty());
  const std::string s = render_tiling(p, certs[0], 9).str();
  EXPECT_EQ(count_of(s, "<polygon id=\"tile\""), 1u);
  EXPECT_EQ(count_of(s, "<use "), 9u);
  EXPECT_NE(s.find("translate(0,0)"), std::string::npos);
}

TEST(RenderTiling, RefusesUnverified) {
  const Polyomino p = build_polyomino(boundary_word(1, 2));
  TilingCertificate cert = certify_all(p)[0];
  cert.verified = false;
  EXPECT_THROW((void)render_tiling(p, cert), std::invalid_argument);
}

TEST(Render, Deterministic) {
  const Polyomino p = build_polyomino(boundary_word(2, 4));
  const auto cert = certify_all(p)[1];
  EXPECT_EQ(render_tiling(p, cert).str(), render_tiling(p, cert).str());
  EXPECT_EQ(render_polyomino(p, 4, true).str(), render_polyomino(build_polyomino(boundary_word(2, 4)), 4, true).str());
  EXPECT_EQ(render_curve(fractal_curve(12, 2)).str(), render_curve(fractal_curve(12, 2)).str());
}
