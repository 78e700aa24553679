#pragma once

// Finite certificates that a polyomino tiles the plane by translation along
// the lattice read off a square BN-factorization.

#include <fibward/pathcalc.hpp>
#include <fibward/snowflake.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace fibward {

/// Half-open cell rectangle [x0, x1) x [y0, y1).
struct Rect {
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;
  std::int64_t x1 = 0;
  std::int64_t y1 = 0;
  [[nodiscard]] std::int64_t width() const { return x1 - x0; }
  [[nodiscard]] std::int64_t height() const { return y1 - y0; }
  [[nodiscard]] bool contains(Point c) const { return c.x >= x0 && c.x < x1 && c.y >= y0 && c.y < y1; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

inline std::int64_t det(Point u, Point v) { return u.x * v.y - u.y * v.x; }

/// The displacements between cut points of f on the traced boundary:
/// A, B, A.B and B.hat(A), in that order.
inline std::array<Point, 4> translation_vector_candidates(const PathWord& b, const BNFactorization& f) {
  if (f.a.size() + f.b.size() != b.size() / 2) throw std::invalid_argument("factorization does not fit the boundary");
  const Point vec_a = displacement(f.a);
  const Point vec_b = displacement(f.b);
  return {vec_a, vec_b, vec_a + vec_b, vec_b - vec_a};
}

enum class CoverageFault { none, gap, overlap };

inline const char* to_string(CoverageFault f) {
  switch (f) {
    case CoverageFault::none: return "none";
    case CoverageFault::gap: return "gap";
    case CoverageFault::overlap: return "overlap";
  }
  return "?";
}

struct CoverageReport {
  Rect window;
  std::size_t copies = 0;
  std::size_t cells_checked = 0;
  CoverageFault fault = CoverageFault::none;
  std::optional<Point> offending_cell;
  std::size_t offending_multiplicity = 0;

  [[nodiscard]] bool exact() const { return fault == CoverageFault::none; }
};

/// Lattice offsets m u + n v whose translate of `p` meets `window`, ordered
/// by (n, m).
inline std::vector<Point> lattice_offsets(const Polyomino& p, Point u, Point v, const Rect& window) {
  const std::int64_t d = det(u, v);
  if (d == 0) return {};
  const CellBox box = p.bounding_box();
  // Offsets t with (window - cells) nonempty lie in this rectangle.
  const Rect region{window.x0 - box.max.x, window.y0 - box.max.y, window.x1 - box.min.x, window.y1 - box.min.y};
  // Lattice coordinates of the region's corners bound (m, n) over the region.
  double m_lo = INFINITY, m_hi = -INFINITY, n_lo = INFINITY, n_hi = -INFINITY;
  for (std::int64_t x : {region.x0, region.x1}) {
    for (std::int64_t y : {region.y0, region.y1}) {
      const double m = static_cast<double>(x * v.y - y * v.x) / static_cast<double>(d);
      const double n = static_cast<double>(u.x * y - u.y * x) / static_cast<double>(d);
      m_lo = std::min(m_lo, m);
      m_hi = std::max(m_hi, m);
      n_lo = std::min(n_lo, n);
      n_hi = std::max(n_hi, n);
    }
  }
  std::vector<Point> out;
  for (auto n = static_cast<std::int64_t>(std::floor(n_lo)) - 1; n <= static_cast<std::int64_t>(std::ceil(n_hi)) + 1; ++n) {
    for (auto m = static_cast<std::int64_t>(std::floor(m_lo)) - 1; m <= static_cast<std::int64_t>(std::ceil(m_hi)) + 1;
         ++m) {
      const Point t = m * u + n * v;
      if (t.x + box.max.x < window.x0 || t.x + box.min.x >= window.x1) continue;
      if (t.y + box.max.y < window.y0 || t.y + box.min.y >= window.y1) continue;
      out.push_back(t);
    }
  }
  return out;
}

/// Places every lattice translate of `p` meeting `window` and checks that
/// each window cell is covered exactly once. The first bad cell in row-major
/// order (bottom row first) is reported.
inline CoverageReport tile_window(const Polyomino& p, Point u, Point v, const Rect& window) {
  CoverageReport report;
  report.window = window;
  if (window.width() <= 0 || window.height() <= 0) return report;
  std::vector<std::uint32_t> multiplicity(static_cast<std::size_t>(window.width() * window.height()), 0);
  const auto index = [&](Point c) { return static_cast<std::size_t>((c.y - window.y0) * window.width() + (c.x - window.x0)); };
  const auto offsets = lattice_offsets(p, u, v, window);
  report.copies = offsets.size();
  for (Point t : offsets) {
    for (Point c : p.cells) {
      const Point cell = c + t;
      if (window.contains(cell)) ++multiplicity[index(cell)];
    }
  }
  report.cells_checked = multiplicity.size();
  for (std::int64_t y = window.y0; y < window.y1; ++y) {
    for (std::int64_t x = window.x0; x < window.x1; ++x) {
      const std::uint32_t k = multiplicity[index({x, y})];
      if (k == 1) continue;
      report.fault = k == 0 ? CoverageFault::gap : CoverageFault::overlap;
      report.offending_cell = Point{x, y};
      report.offending_multiplicity = k;
      return report;
    }
  }
  return report;
}

/// A square window three times the larger bounding-box side, centred on the
/// polyomino.
inline Rect default_window(const Polyomino& p) {
  const CellBox box = p.bounding_box();
  const std::int64_t side = 3 * std::max(box.width(), box.height());
  const std::int64_t cx = box.min.x + box.width() / 2;
  const std::int64_t cy = box.min.y + box.height() / 2;
  return {cx - side / 2, cy - side / 2, cx - side / 2 + side, cy - side / 2 + side};
}

struct TilingCertificate {
  BNFactorization factorization;
  Point u;
  Point v;
  Rect window;
  CoverageReport coverage;
  bool verified = false;
};

/// Tries the candidate pairs in a fixed order and keeps the first one whose
/// determinant matches the area and whose window coverage is exact.
inline TilingCertificate certify(const Polyomino& p, const BNFactorization& f) {
  TilingCertificate cert{f, {}, {}, default_window(p), {}, false};
  const auto cand = translation_vector_candidates(p.boundary, f);
  const auto area = static_cast<std::int64_t>(p.area());
  for (std::size_t j = 0; j < cand.size(); ++j) {
    for (std::size_t k = j + 1; k < cand.size(); ++k) {
      const std::int64_t d = det(cand[j], cand[k]);
      if (d == 0 || std::abs(d) != area) continue;
      CoverageReport report = tile_window(p, cand[j], cand[k], cert.window);
      cert.u = cand[j];
      cert.v = cand[k];
      cert.coverage = std::move(report);
      if (cert.coverage.exact()) {
        cert.verified = true;
        return cert;
      }
    }
  }
  return cert;
}

inline std::vector<TilingCertificate> certify_all(const Polyomino& p) {
  std::vector<TilingCertificate> out;
  for (const auto& f : bn_square_factorizations(p.boundary)) out.push_back(certify(p, f));
  return out;
}

/// Number of square-factorization classes whose certificate verifies.
inline std::size_t distinct_tilings(const Polyomino& p) {
  const auto certs = certify_all(p);
  return static_cast<std::size_t>(std::count_if(certs.begin(), certs.end(), [](const auto& c) { return c.verified; }));
}

/// Hermite normal form of the lattice spanned by columns u, v:
/// basis (a, b), (0, c) with a > 0, c > 0 and 0 <= b < c.
struct HermiteForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  friend bool operator==(const HermiteForm&, const HermiteForm&) = default;
};

inline HermiteForm hermite_normal_form(Point u, Point v) {
  if (det(u, v) == 0) throw std::domain_error("hermite_normal_form: vectors are dependent");
  // Extended gcd on the x components, tracking the y components.
  std::int64_t old_r = u.x, r = v.x;
  std::int64_t old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  // old_r = old_s u.x + old_t v.x; (s, t) is the cofactor pair with s u.x + t v.x = 0.
  Point first = old_s * u + old_t * v;
  Point second = s * u + t * v;
  if (first.x < 0) first = -first;
  if (second.y < 0) second = -second;
  HermiteForm h{first.x, first.y % second.y, second.y};
  if (h.b < 0) h.b += h.c;
  return h;
}

inline bool same_lattice(Point u1, Point v1, Point u2, Point v2) {
  return hermite_normal_form(u1, v1) == hermite_normal_form(u2, v2);
}

}  // namespace fibward
