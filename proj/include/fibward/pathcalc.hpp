#pragma once

// Path algebra over the Freeman alphabet {0,1,2,3}: running sums and
// differences, the bar/hat involutions, lattice tracing and the
// closed/simple/boundary predicates.

#include <fibward/word.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace fibward {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend Point operator*(std::int64_t k, Point a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Point, Point) = default;
  friend auto operator<=>(Point, Point) = default;
  friend std::ostream& operator<<(std::ostream& os, Point p) { return os << '(' << p.x << ", " << p.y << ')'; }
};

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    return std::hash<std::int64_t>{}(p.x) * 0x9E3779B97F4A7C15ULL ^ std::hash<std::int64_t>{}(p.y);
  }
};

/// Unit step of a Freeman symbol.
inline Point step_vector(PathWord::symbol_type s) {
  static constexpr std::array<Point, 4> steps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  if (s > 3) throw std::invalid_argument("not a Freeman symbol");
  return steps[s];
}

/// Net displacement of the path.
inline Point displacement(const PathWord& w) {
  Point p;
  for (auto s : w) p = p + step_vector(s);
  return p;
}

/// Sequence of lattice points visited by a path; always one more point than steps.
class LatticePath {
 public:
  explicit LatticePath(Point origin = {}) : points_{origin} {}

  void step(PathWord::symbol_type s) { points_.push_back(points_.back() + step_vector(s)); }

  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] Point origin() const { return points_.front(); }
  [[nodiscard]] Point endpoint() const { return points_.back(); }

  /// The path made of the first `steps` steps.
  [[nodiscard]] LatticePath prefix(std::size_t steps) const {
    LatticePath out = *this;
    if (steps + 1 < out.points_.size()) out.points_.resize(steps + 1);
    return out;
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Point> points_;
};

inline LatticePath trace(const PathWord& w, Point origin = {}) {
  LatticePath path(origin);
  for (auto s : w) path.step(s);
  return path;
}

namespace detail {
inline PathWord::symbol_type mod4(int v) { return static_cast<PathWord::symbol_type>(((v % 4) + 4) % 4); }

inline void require_symbol(int alpha) {
  if (alpha < 0 || alpha > 3) throw std::invalid_argument("alpha must be one of 0,1,2,3");
}
}  // namespace detail

/// alpha, alpha + w1, alpha + w1 + w2, ..., alpha + w1 + ... + wn (mod 4).
inline PathWord sigma(int alpha, const PathWord& w) {
  detail::require_symbol(alpha);
  PathWord out;
  out.reserve(w.size() + 1);
  int sum = alpha;
  out.push_back(detail::mod4(sum));
  for (auto s : w) {
    sum += s;
    out.push_back(detail::mod4(sum));
  }
  return out;
}

/// sigma without its final running sum; same length as w.
inline PathWord sigma_circ(int alpha, const PathWord& w) {
  PathWord full = sigma(alpha, w);
  return full.prefix(w.size());
}

/// (w2 - w1)(w3 - w2)...(wn - w_{n-1}) (mod 4).
inline PathWord delta(const PathWord& w) {
  if (w.empty()) throw std::domain_error("delta of the empty word");
  PathWord out;
  out.reserve(w.size() - 1);
  for (std::size_t k = 1; k < w.size(); ++k) out.push_back(detail::mod4(int(w[k]) - int(w[k - 1])));
  return out;
}

/// Letter-wise 0 -> 0, 1 -> 3, 2 -> 2, 3 -> 1 (reflection across the horizontal axis).
inline PathWord bar(const PathWord& w) {
  PathWord out;
  out.reserve(w.size());
  for (auto s : w) out.push_back(detail::mod4(-int(s)));
  return out;
}

/// Letter-wise rotation by k quarter turns.
inline PathWord rho(const PathWord& w, int k = 1) {
  PathWord out;
  out.reserve(w.size());
  for (auto s : w) out.push_back(detail::mod4(int(s) + k));
  return out;
}

/// The same path traveled backwards: rho^2 of the reversal.
inline PathWord hat(const PathWord& w) { return rho(w.reversed(), 2); }

inline bool is_antipalindrome(const PathWord& w) { return bar(w) == w.reversed(); }

/// Recoding of a binary turn word into {0,2}: 0 -> 2, 1 -> 0.
inline PathWord turn_recoding(const BinaryWord& w) {
  PathWord out;
  out.reserve(w.size());
  for (auto s : w) out.push_back(s == 0 ? 2 : 0);
  return out;
}

inline bool is_closed(const PathWord& w) { return w.count(0) == w.count(2) && w.count(1) == w.count(3); }

/// No nonempty proper factor is closed. A closed word may return to its start
/// once, at the very end; two-step closed words ("02", "13", ...) retrace an
/// edge and are not simple.
inline bool is_simple(const PathWord& w) {
  std::unordered_set<Point, PointHash> seen;
  seen.reserve(w.size() + 1);
  Point p{};
  seen.insert(p);
  for (std::size_t k = 0; k < w.size(); ++k) {
    p = p + step_vector(w[k]);
    const bool last = k + 1 == w.size();
    if (last && p == Point{} && w.size() >= 4) return true;
    if (!seen.insert(p).second) return false;
  }
  return true;
}

/// Closed and simple: the boundary of a polyomino.
inline bool is_boundary_word(const PathWord& w) { return !w.empty() && is_closed(w) && is_simple(w); }

/// Twice the signed area enclosed by a closed lattice path (shoelace formula);
/// positive for counterclockwise traversal.
inline std::int64_t signed_area_twice(const LatticePath& path) {
  const auto& pts = path.points();
  std::int64_t acc = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) acc += pts[k].x * pts[k + 1].y - pts[k + 1].x * pts[k].y;
  return acc;
}

}  // namespace fibward
