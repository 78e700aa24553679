#include <fibward/curve.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace fibward;

namespace {

BinaryWord bw(const char* s) { return BinaryWord::parse(s); }

std::set<Point> as_set(const LatticePath& path) { return {path.points().begin(), path.points().end()}; }

}  // namespace

TEST(OddEvenDraw, Examples) {
  const Curve one = odd_even_draw(bw("1"));
  EXPECT_EQ(one.path.points(), (std::vector<Point>{{0, 0}, {0, 1}}));
  EXPECT_EQ(segments(odd_even_draw(bw("11"))), std::vector<std::size_t>{2});
  EXPECT_EQ(segments(one), std::vector<std::size_t>{1});
}

TEST(OddEvenDraw, TurnRule) {
  // Position 1 is odd: a 0 there turns right; position 2 is even: a 0 turns left.
  EXPECT_EQ(odd_even_draw(bw("01")).path.endpoint(), (Point{1, 1}));
  EXPECT_EQ(odd_even_draw(bw("101")).path.endpoint(), (Point{-1, 2}));
  EXPECT_EQ(odd_even_draw(bw("1"), Heading::east).path.endpoint(), (Point{1, 0}));
}

TEST(OddEvenDraw, PointCount) {
  for (int i = 1; i <= 6; ++i)
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(fractal_curve(n, i).path.size(), fib_word(n, i).size() + 1);
}

TEST(OddEvenDraw, OddOffsetMirrors) {
  for (int i = 2; i <= 4; ++i) {
    for (int n = 4; n <= 10; ++n) {
      const BinaryWord w = fib_word(n, i);
      EXPECT_EQ(odd_even_draw(w, Heading::north, 2).path, odd_even_draw(w).path);
      // Swapping every turn reflects the curve in its initial heading.
      const auto shifted = odd_even_draw(w, Heading::north, 1).path;
      std::set<Point> flipped;
      for (Point p : shifted.points()) flipped.insert({-p.x, p.y});
      EXPECT_EQ(flipped, as_set(odd_even_draw(w).path)) << i << " " << n;
    }
  }
}

TEST(Segments, ClassicWordHasShortSegments) {
  const Curve c = odd_even_draw(classic_fib_word(10));
  EXPECT_EQ(c.source.size(), 89u);
  for (std::size_t s : segments(c)) EXPECT_TRUE(s == 1 || s == 2);
}

TEST(Segments, OnlyLengthsOneAndTwo) {
  for (int i = 2; i <= 6; ++i) {
    for (int n = 1; n <= 15; ++n) {
      const auto runs = segments(fractal_curve(n, i));
      std::size_t total = 0;
      for (std::size_t s : runs) {
        EXPECT_TRUE(s == 1 || s == 2) << i << " " << n;
        total += s;
      }
      EXPECT_EQ(total, fib_word(n, i).size());
    }
  }
}

TEST(Symmetry, SingleSegmentIsLineSymmetric) {
  EXPECT_EQ(symmetry_class(odd_even_draw(bw("1"))), Symmetry::line);
  EXPECT_EQ(symmetry_class(odd_even_draw(bw("11"))), Symmetry::line);
}

TEST(Symmetry, AsymmetricExample) {
  EXPECT_EQ(symmetry_class(odd_even_draw(bw("10111"))), Symmetry::asymmetric);
}

TEST(Symmetry, CurveBodiesByResidue) {
  for (int i = 1; i <= 6; ++i) {
    for (int n = 3; n <= 15; ++n) {
      const Curve body = curve_body(fractal_curve(n, i));
      EXPECT_EQ(symmetry_class(body), expected_body_symmetry(n, i)) << "i=" << i << " n=" << n;
    }
  }
}

TEST(Symmetry, EvenFamiliesFollowTheStatedClasses) {
  // For even i: F_{3m} and F_{3m+2} bodies are line symmetric, F_{3m+1} point symmetric.
  for (int i : {2, 4, 6}) {
    for (int m = 2; m <= 4; ++m) {
      EXPECT_EQ(symmetry_class(curve_body(fractal_curve(3 * m, i))), Symmetry::line);
      EXPECT_EQ(symmetry_class(curve_body(fractal_curve(3 * m + 1, i))), Symmetry::point);
      EXPECT_EQ(symmetry_class(curve_body(fractal_curve(3 * m + 2, i))), Symmetry::line);
    }
  }
}

TEST(Symmetry, OddFamiliesShiftThePointClass) {
  for (int i : {3, 5}) {
    for (int m = 2; m <= 4; ++m) {
      EXPECT_EQ(symmetry_class(curve_body(fractal_curve(3 * m, i))), Symmetry::line);
      EXPECT_EQ(symmetry_class(curve_body(fractal_curve(3 * m + 1, i))), Symmetry::line);
      EXPECT_EQ(symmetry_class(curve_body(fractal_curve(3 * m + 2, i))), Symmetry::point);
    }
  }
}

TEST(CurveBody, DropsLastStep) {
  const Curve c = fractal_curve(7, 3);
  const Curve b = curve_body(c);
  EXPECT_EQ(b.source.size() + 1, c.source.size());
  EXPECT_EQ(b.path.size() + 1, c.path.size());
  EXPECT_TRUE(std::equal(b.path.points().begin(), b.path.points().end(), c.path.points().begin()));
}

TEST(ScaleFactor, ApproachesOnePlusSqrt2) {
  const double target = 1 + std::numbers::sqrt2;
  EXPECT_NEAR(scale_factor(2, 15) / target, 1.0, 0.02);
  EXPECT_NEAR(scale_factor(3, 15) / target, 1.0, 0.02);
  EXPECT_THROW((void)scale_factor(2, 5), std::domain_error);
  // Along n = 0 (mod 3) the i = 2 ratios approach the target monotonically.
  double previous_gap = INFINITY;
  for (int n : {9, 12, 15, 18}) {
    const double gap = std::abs(scale_factor(2, n) - target);
    EXPECT_LT(gap, previous_gap) << n;
    previous_gap = gap;
  }
}

TEST(EndpointRecurrence, ExactForMultiplesOfThree) {
  for (int n : {9, 12, 15, 18}) {
    const Point a = fractal_curve(n, 2).path.endpoint();
    const Point b = fractal_curve(n - 3, 2).path.endpoint();
    const Point c = fractal_curve(n - 6, 2).path.endpoint();
    // The endpoints lie on the axes here, so the distances are integers.
    const auto len = [](Point p) { return std::abs(p.x) + std::abs(p.y); };
    ASSERT_TRUE(a.x == 0 || a.y == 0);
    EXPECT_EQ(len(a), 2 * len(b) + len(c)) << n;
  }
}

TEST(EndpointRecurrence, ApproximateOtherwise) {
  for (int n : {10, 11, 13, 14}) {
    const double lhs = endpoint_distance(fractal_curve(n, 2));
    const double rhs = 2 * endpoint_distance(fractal_curve(n - 3, 2)) + endpoint_distance(fractal_curve(n - 6, 2));
    EXPECT_NE(lhs, rhs);
    EXPECT_NEAR(lhs / rhs, 1.0, 0.07) << n;
  }
}

TEST(Decomposition, Examples) {
  EXPECT_TRUE(decomposition_check(2, 9));
  EXPECT_TRUE(decomposition_check(5, 12));
  EXPECT_THROW((void)decomposition_check(3, 5), std::domain_error);
}

TEST(AbCurve, Examples) {
  const Curve c = ab_curve(2, 5, 9);
  EXPECT_EQ(c.path.size(), ab_fib_word(2, 5, 9).size() + 1);
  EXPECT_EQ(ab_curve(3, 4, 1).path.size(), 2u);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(Integer(ab_curve(1, 1, n).source.size()), ab_fib_number(1, 1, n));
}
