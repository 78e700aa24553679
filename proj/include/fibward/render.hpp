#pragma once

// Deterministic SVG output. Coordinates are lattice units times an integer
// scale, so every number in the document is an integer; the document flips
// the y axis once so lattice +y points up on screen.

#include <fibward/curve.hpp>
#include <fibward/snowflake.hpp>
#include <fibward/tiling.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibward {

class SvgDocument {
 public:
  SvgDocument(Point lo, Point hi, int scale) : scale_(scale) {
    if (scale < 1) throw std::invalid_argument("scale must be >= 1");
    // One lattice unit of margin on every side.
    lo_ = {lo.x - 1, lo.y - 1};
    hi_ = {hi.x + 1, hi.y + 1};
  }

  [[nodiscard]] int scale() const { return scale_; }
  [[nodiscard]] std::int64_t width() const { return (hi_.x - lo_.x) * scale_; }
  [[nodiscard]] std::int64_t height() const { return (hi_.y - lo_.y) * scale_; }
  [[nodiscard]] const std::vector<std::string>& elements() const { return elements_; }

  void add_def(std::string element) { defs_.push_back(std::move(element)); }
  void add(std::string element) { elements_.push_back(std::move(element)); }

  /// "x,y x,y ..." in scaled integer coordinates.
  [[nodiscard]] std::string points_attribute(const std::vector<Point>& pts) const {
    std::ostringstream os;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) os << ' ';
      os << pts[k].x * scale_ << ',' << pts[k].y * scale_;
    }
    return os.str();
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\""
       << " width=\"" << width() << "\" height=\"" << height() << "\" viewBox=\"" << lo_.x * scale_ << ' '
       << -hi_.y * scale_ << ' ' << width() << ' ' << height() << "\">\n";
    if (!defs_.empty()) {
      os << "<defs>\n";
      for (const auto& d : defs_) os << d << '\n';
      os << "</defs>\n";
    }
    os << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& e : elements_) os << e << '\n';
    os << "</g>\n</svg>\n";
    return os.str();
  }

 private:
  Point lo_;
  Point hi_;
  int scale_;
  std::vector<std::string> defs_;
  std::vector<std::string> elements_;
};

namespace detail {

inline std::pair<Point, Point> bounds(const std::vector<Point>& pts) {
  Point lo = pts.front();
  Point hi = pts.front();
  for (Point p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return {lo, hi};
}

/// Boundary vertices where the direction changes, starting at the first corner.
inline std::vector<Point> corners(const LatticePath& path) {
  const auto& pts = path.points();
  const std::size_t len = pts.size() - 1;  // closed: pts[len] == pts[0]
  std::vector<Point> out;
  for (std::size_t k = 0; k < len; ++k) {
    const Point in = pts[k] - pts[(k + len - 1) % len];
    const Point out_dir = pts[k + 1] - pts[k];
    if (in != out_dir) out.push_back(pts[k]);
  }
  return out;
}

}  // namespace detail

inline std::string svg_file_name(const std::string& kind, int i, int n) {
  return kind + "_" + std::to_string(i) + "_" + std::to_string(n) + ".svg";
}

/// One polyline through every curve point.
inline SvgDocument render_curve(const Curve& c, int scale = 4) {
  const auto& pts = c.path.points();
  const auto [lo, hi] = detail::bounds(pts);
  SvgDocument doc(lo, hi, scale);
  if (pts.size() < 2) return doc;
  doc.add("<polyline fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"" + std::to_string(std::max(1, scale / 4)) +
          "\" stroke-linejoin=\"round\" points=\"" + doc.points_attribute(pts) + "\"/>");
  return doc;
}

/// The filled boundary polygon, optionally with the unit-cell grid.
inline SvgDocument render_polyomino(const Polyomino& p, int scale = 4, bool grid = false) {
  const LatticePath path = trace(p.boundary, p.start);
  const auto [lo, hi] = detail::bounds(path.points());
  SvgDocument doc(lo, hi, scale);
  if (grid) {
    for (Point c : p.cells) {
      doc.add("<rect x=\"" + std::to_string(c.x * scale) + "\" y=\"" + std::to_string(c.y * scale) + "\" width=\"" +
              std::to_string(scale) + "\" height=\"" + std::to_string(scale) +
              "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>");
    }
  }
  doc.add("<polygon fill=\"#9ecae1\" fill-opacity=\"0.8\" stroke=\"#08306b\" stroke-width=\"" +
          std::to_string(std::max(1, scale / 4)) + "\" points=\"" + doc.points_attribute(detail::corners(path)) + "\"/>");
  return doc;
}

/// `copies` translates of the tile at the lattice points nearest the origin
/// (by max(|m|, |n|), then n, then m), in two alternating tones.
inline SvgDocument render_tiling(const Polyomino& p, const TilingCertificate& cert, std::size_t copies = 25,
                                 int scale = 4) {
  if (!cert.verified) throw std::invalid_argument("refusing to render an unverified tiling certificate");
  struct Slot {
    std::int64_t m, n;
  };
  std::vector<Slot> slots;
  for (std::int64_t radius = 0; slots.size() < copies; ++radius) {
    for (std::int64_t n = -radius; n <= radius; ++n) {
      for (std::int64_t m = -radius; m <= radius; ++m) {
        if (std::max(std::abs(m), std::abs(n)) == radius) slots.push_back({m, n});
      }
    }
  }
  slots.resize(copies);

  const LatticePath path = trace(p.boundary, p.start);
  const auto tile = detail::corners(path);
  std::vector<Point> extent;
  for (const auto& s : slots) {
    const Point t = s.m * cert.u + s.n * cert.v;
    for (Point c : tile) extent.push_back(c + t);
  }
  if (extent.empty()) extent.push_back(p.start);
  const auto [lo, hi] = detail::bounds(extent);
  SvgDocument doc(lo, hi, scale);
  doc.add_def("<polygon id=\"tile\" stroke=\"#202020\" stroke-width=\"" + std::to_string(std::max(1, scale / 4)) +
              "\" points=\"" + doc.points_attribute(tile) + "\"/>");
  for (const auto& s : slots) {
    const Point t = scale * (s.m * cert.u + s.n * cert.v);
    const char* tone = (s.m + s.n) % 2 == 0 ? "#fdae6b" : "#6baed6";
    doc.add("<use xlink:href=\"#tile\" fill=\"" + std::string(tone) + "\" transform=\"translate(" + std::to_string(t.x) +
            "," + std::to_string(t.y) + ")\"/>");
  }
  return doc;
}

}  // namespace fibward
