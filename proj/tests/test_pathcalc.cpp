#include <fibward/pathcalc.hpp>
#include <fibward/wordgen.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace fibward;

namespace {

PathWord pw(const char* s) { return PathWord::parse(s); }

PathWord random_path(std::mt19937& rng, std::size_t max_len, std::size_t min_len = 0) {
  const std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::vector<std::uint8_t> s(len);
  for (auto& x : s) x = static_cast<std::uint8_t>(rng() % 4);
  return PathWord(s);
}

}  // namespace

TEST(PathWord, RejectsForeignSymbols) {
  EXPECT_THROW((void)PathWord::parse("0124"), std::invalid_argument);
  EXPECT_THROW((void)BinaryWord::parse("012"), std::invalid_argument);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(0, PathWord{}), pw("0"));
  EXPECT_EQ(sigma(1, pw("13")), pw("121"));
  EXPECT_EQ(sigma(1, pw("13")).str(), oracle::partial_sums(1, "13", false));
  const PathWord turns = turn_recoding(fib_word_prefix(2, 40));
  EXPECT_EQ(sigma(0, sigma(1, turns)).prefix(12), pw("010303230301"));
  EXPECT_EQ(sigma(0, sigma(1, turn_recoding(fib_word_prefix(3, 40)))).prefix(14), pw("01012121010303"));
  EXPECT_EQ(sigma(0, sigma(1, turn_recoding(fib_word_prefix(4, 40)))).prefix(14), pw("01010303032323"));
  EXPECT_THROW((void)sigma(4, pw("0")), std::invalid_argument);
}

TEST(SigmaCirc, Examples) {
  EXPECT_EQ(sigma_circ(0, pw("1")), pw("0"));
  EXPECT_EQ(sigma_circ(0, pw("133133133133")), pw("010303232121"));
  EXPECT_EQ(sigma_circ(0, pw("133133133133")).str(), oracle::partial_sums(0, "133133133133", true));
}

TEST(SigmaCirc, LengthAndOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const PathWord w = random_path(rng, 200);
    const int alpha = static_cast<int>(rng() % 4);
    EXPECT_EQ(sigma_circ(alpha, w).size(), w.size());
    EXPECT_EQ(sigma(alpha, w).str(), oracle::partial_sums(alpha, w.str(), false));
    EXPECT_EQ(sigma_circ(alpha, w).str(), oracle::partial_sums(alpha, w.str(), true));
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(pw("00")), pw("0"));
  EXPECT_THROW((void)delta(PathWord{}), std::domain_error);
}

TEST(Delta, InvertsSigma) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PathWord w = random_path(rng, 10000);
    const int alpha = static_cast<int>(rng() % 4);
    EXPECT_EQ(delta(sigma(alpha, w)), w);
    if (!w.empty()) EXPECT_EQ(sigma(w.front(), delta(w)), w);
  }
}

TEST(Delta, OfTheLimitPath) {
  for (int i = 1; i <= 6; ++i) {
    const PathWord q = sigma(1, turn_recoding(fib_word_prefix(i, 1000)));
    const PathWord p = sigma(0, q);
    EXPECT_EQ(delta(p), q);
  }
}

TEST(Bar, Examples) {
  EXPECT_EQ(bar(pw("13")), pw("31"));
  EXPECT_EQ(bar(pw("0123")), pw("0321"));
  EXPECT_TRUE(is_antipalindrome(pw("13")));
  EXPECT_TRUE(is_antipalindrome(PathWord{}));
  EXPECT_FALSE(is_antipalindrome(pw("11")));
}

TEST(Hat, Examples) {
  EXPECT_EQ(hat(pw("2122323030103011")), pw("3321232121010030"));
  EXPECT_EQ(hat(pw("0")), pw("2"));
  EXPECT_EQ(hat(pw("2122323030103011")).str(), oracle::hat("2122323030103011"));
}

TEST(Involutions, RandomWords) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const PathWord w = random_path(rng, 100);
    EXPECT_EQ(bar(bar(w)), w);
    EXPECT_EQ(hat(hat(w)), w);
    EXPECT_EQ(rho(rho(w, 1), 3), w);
  }
}

TEST(Geometry, HatRetracesBackwards) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const PathWord w = random_path(rng, 80);
    const LatticePath forward = trace(w);
    const LatticePath backward = trace(hat(w), forward.endpoint());
    std::vector<Point> rev(forward.points().rbegin(), forward.points().rend());
    EXPECT_EQ(backward.points(), rev);
  }
}

TEST(Geometry, BarMirrorsAcrossHorizontalAxis) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const PathWord w = random_path(rng, 80);
    const auto a = trace(w).points();
    const auto b = trace(bar(w)).points();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(b[k], (Point{a[k].x, -a[k].y}));
  }
}

TEST(Closed, Examples) {
  EXPECT_TRUE(is_closed(pw("2122323030103011")));
  EXPECT_TRUE(is_closed(PathWord{}));
  EXPECT_FALSE(is_closed(pw("01")));
}

TEST(Closed, IffEndpointIsOrigin) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const PathWord w = random_path(rng, 12);
    EXPECT_EQ(is_closed(w), trace(w).endpoint() == Point{});
  }
}

TEST(Simple, Examples) {
  EXPECT_FALSE(is_simple(pw("02")));
  EXPECT_TRUE(is_simple(pw("001")));
  EXPECT_TRUE(is_simple(pw("0123")));
  EXPECT_FALSE(is_simple(pw("0202")));
}

TEST(Simple, AgreesWithFactorOracle) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 3000; ++trial) {
    const PathWord w = random_path(rng, 14, 1);
    EXPECT_EQ(is_simple(w), oracle::simple_by_factors(w.str())) << w;
  }
  // Closed self-avoiding loops of every small size.
  for (const char* s : {"0123", "001223", "0011223300", "2122323030103011"})
    EXPECT_EQ(is_simple(pw(s)), oracle::simple_by_factors(s)) << s;
}

TEST(Boundary, Examples) {
  EXPECT_TRUE(is_boundary_word(pw("2122323030103011")));
  EXPECT_TRUE(is_boundary_word(pw("0123")));
  EXPECT_FALSE(is_boundary_word(pw("0202")));
  EXPECT_FALSE(is_boundary_word(pw("02")));
  EXPECT_FALSE(is_boundary_word(PathWord{}));
}

TEST(Boundary, RotationsStayBoundaryWords) {
  const PathWord b = pw("2122323030103011");
  for (std::size_t r = 0; r < b.size(); ++r) EXPECT_TRUE(is_boundary_word(b.rotated(r))) << r;
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(pw("0123")).points(), (std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}));
  const LatticePath t = trace(pw("010303232121"));
  EXPECT_EQ(t.size(), 13u);
  EXPECT_EQ(t.endpoint(), Point{});
  EXPECT_EQ(trace(PathWord{}, {4, -2}).points(), (std::vector<Point>{{4, -2}}));
}

TEST(Trace, PointCountAndUnitSteps) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const PathWord w = random_path(rng, 300);
    const auto pts = trace(w, {3, 7}).points();
    ASSERT_EQ(pts.size(), w.size() + 1);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const Point d = pts[k + 1] - pts[k];
      EXPECT_EQ(std::abs(d.x) + std::abs(d.y), 1);
    }
  }
}

TEST(Shoelace, MatchesOracle) {
  for (const char* s : {"0123", "001223", "2122323030103011", "010303232121"})
    EXPECT_EQ(signed_area_twice(trace(pw(s))), oracle::shoelace_twice(s)) << s;
}
