#pragma once

// The odd-even drawing rule and curve-level checks for the i-Fibonacci word
// fractal: segment runs, lattice symmetries, scale factor and the five-part
// decomposition.

#include <fibward/pathcalc.hpp>
#include <fibward/wordgen.hpp>

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fibward {

/// Axis direction, numbered like Freeman symbols.
enum class Heading : std::uint8_t { east = 0, north = 1, west = 2, south = 3 };

inline Heading turn_left(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 1) % 4); }
inline Heading turn_right(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 3) % 4); }

struct TurtleState {
  Point position;
  Heading heading = Heading::north;
  std::size_t step_index = 1;  // 1-based position of the next symbol
};

struct Curve {
  LatticePath path;
  BinaryWord source;
};

/// Odd-even drawing rule. Every symbol draws one unit forward; a 0 then turns
/// left when its 1-based position is even and right when it is odd.
/// `position_offset` shifts every position, so an odd offset mirrors the curve.
inline Curve odd_even_draw(const BinaryWord& w, Heading initial_heading = Heading::north,
                           std::size_t position_offset = 0) {
  TurtleState turtle{{}, initial_heading, 1 + position_offset};
  LatticePath path(turtle.position);
  for (auto s : w) {
    path.step(static_cast<PathWord::symbol_type>(turtle.heading));
    if (s == 0) turtle.heading = turtle.step_index % 2 == 0 ? turn_left(turtle.heading) : turn_right(turtle.heading);
    ++turtle.step_index;
  }
  return {std::move(path), w};
}

/// The curve F_n^[i].
inline Curve fractal_curve(int n, int i, Heading initial_heading = Heading::north) {
  return odd_even_draw(fib_word(n, i), initial_heading);
}

/// The curve without its final unit step. Because f_n = Phi(f_n) a b with
/// Phi(f_n) a palindrome, this is the part that carries the symmetry.
inline Curve curve_body(const Curve& c) {
  if (c.source.empty()) return c;
  return {c.path.prefix(c.source.size() - 1), c.source.prefix(c.source.size() - 1)};
}

/// Lengths of the maximal straight runs, in drawing order.
inline std::vector<std::size_t> segments(const Curve& c) {
  const auto& pts = c.path.points();
  std::vector<std::size_t> runs;
  if (pts.size() < 2) return runs;
  std::size_t run = 1;
  for (std::size_t k = 2; k < pts.size(); ++k) {
    if (pts[k] - pts[k - 1] == pts[k - 1] - pts[k - 2]) {
      ++run;
    } else {
      runs.push_back(run);
      run = 1;
    }
  }
  runs.push_back(run);
  return runs;
}

enum class Symmetry { line, point, asymmetric };

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::line: return "line-symmetric";
    case Symmetry::point: return "point-symmetric";
    case Symmetry::asymmetric: return "asymmetric";
  }
  return "?";
}

namespace detail {

/// Integer 2x2 matrix acting on lattice points.
struct LinearIsometry {
  std::int64_t a, b, c, d;
  [[nodiscard]] Point apply(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  [[nodiscard]] bool is_reflection() const { return a * d - b * c == -1; }
  [[nodiscard]] bool is_half_turn() const { return a == -1 && d == -1 && b == 0 && c == 0; }
};

// The non-identity elements of the dihedral group of the square lattice.
inline constexpr std::array<LinearIsometry, 7> lattice_isometries{{
    {0, -1, 1, 0},   // quarter turn
    {-1, 0, 0, -1},  // half turn
    {0, 1, -1, 0},   // three-quarter turn
    {1, 0, 0, -1},   // mirror in a horizontal line
    {-1, 0, 0, 1},   // mirror in a vertical line
    {0, 1, 1, 0},    // mirror in a diagonal
    {0, -1, -1, 0},  // mirror in an antidiagonal
}};

using Edge = std::pair<Point, Point>;

inline Edge make_edge(Point p, Point q) { return p < q ? Edge{p, q} : Edge{q, p}; }

inline std::set<Edge> edge_set(const LatticePath& path) {
  std::set<Edge> edges;
  const auto& pts = path.points();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) edges.insert(make_edge(pts[k], pts[k + 1]));
  return edges;
}

}  // namespace detail

/// Classifies the drawn figure (its set of unit edges) by the lattice
/// isometries that preserve it. Any symmetry must map the pair of endpoints
/// to itself, which pins each candidate's translation; all tests are exact.
inline Symmetry symmetry_class(const Curve& c) {
  const auto edges = detail::edge_set(c.path);
  const Point s = c.path.origin();
  const Point e = c.path.endpoint();
  bool line = false;
  bool point = false;
  for (const auto& g : detail::lattice_isometries) {
    if (!g.is_reflection() && !g.is_half_turn()) continue;
    for (Point target : {s, e}) {
      const Point t = target - g.apply(s);
      const auto map = [&](Point p) { return g.apply(p) + t; };
      const Point ms = map(s);
      const Point me = map(e);
      if (!((ms == s && me == e) || (ms == e && me == s))) continue;
      bool invariant = true;
      for (const auto& [p, q] : edges) {
        if (!edges.contains(detail::make_edge(map(p), map(q)))) {
          invariant = false;
          break;
        }
      }
      if (!invariant) continue;
      if (g.is_reflection()) line = true;
      else point = true;
    }
  }
  if (line) return Symmetry::line;
  if (point) return Symmetry::point;
  return Symmetry::asymmetric;
}

/// The symmetry class observed for curve_body(F_n^[i]): for even i the point
/// symmetric curves are n = 1 (mod 3); for odd i they are n = 2 (mod 3).
inline Symmetry expected_body_symmetry(int n, int i) {
  const int point_residue = i % 2 == 0 ? 1 : 2;
  return n % 3 == point_residue ? Symmetry::point : Symmetry::line;
}

/// Euclidean distance between the first and last points drawn.
inline double endpoint_distance(const Curve& c) {
  const Point d = c.path.endpoint() - c.path.origin();
  return std::hypot(static_cast<double>(d.x), static_cast<double>(d.y));
}

/// L_n / L_{n-3}, the ratio of endpoint distances of F_n^[i] and F_{n-3}^[i].
inline double scale_factor(int i, int n) {
  detail::require(n >= 6, "scale_factor needs n >= 6");
  const double num = endpoint_distance(fractal_curve(n, i));
  const double den = endpoint_distance(fractal_curve(n - 3, i));
  detail::require(den > 0 && num > 0, "degenerate curve displacement");
  return num / den;
}

/// f_n = f_{n-3} f_{n-3} f_{n-6} l_{n-3} l_{n-3}, with l the last-two-swapped word.
inline bool decomposition_check(int i, int n) {
  detail::require(n >= 6, "decomposition_check needs n >= 6");
  const BinaryWord f3 = fib_word(n - 3, i);
  const BinaryWord l3 = swap_last_two(f3);
  return fib_word(n, i) == f3 + f3 + fib_word(n - 6, i) + l3 + l3;
}

inline Curve ab_curve(int a, int b, int n, Heading initial_heading = Heading::north) {
  return odd_even_draw(ab_fib_word(a, b, n), initial_heading);
}

}  // namespace fibward
