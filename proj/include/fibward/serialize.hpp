#pragma once

// JSON forms of the library's values. Integers that fit in 64 bits are JSON
// numbers; larger ones are decimal strings. Integer sequences are always
// arrays of decimal strings.

#include <fibward/curve.hpp>
#include <fibward/exact.hpp>
#include <fibward/metrics.hpp>
#include <fibward/snowflake.hpp>
#include <fibward/tiling.hpp>

#include <json.hpp>

#include <limits>
#include <vector>

namespace fibward {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline Json sequence_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

inline Json point_json(Point p) { return Json::array({p.x, p.y}); }

inline Json path_json(const LatticePath& path) {
  Json out = Json::array();
  for (Point p : path.points()) out.push_back(point_json(p));
  return out;
}

inline Json curve_json(const Curve& c) {
  return {{"word", c.source.str()}, {"points", path_json(c.path)}};
}

inline Json polyomino_json(const Polyomino& p) {
  Json cells = Json::array();
  for (Point c : p.cells) cells.push_back(point_json(c));
  return {{"boundary", p.boundary.str()}, {"cells", std::move(cells)}};
}

inline Json factorization_json(const BNFactorization& f) {
  return {{"rotation", f.rotation}, {"A", f.a.str()}, {"B", f.b.str()}};
}

inline Json endpoint_json(const EndpointVector& e) { return Json::array({integer_json(e.x), integer_json(e.y)}); }

inline Json metrics_json(const MetricsReport& r) {
  return {{"n", r.n},
          {"i", r.i},
          {"perimeter", integer_json(r.perimeter)},
          {"area", integer_json(r.area)},
          {"bounding_side", integer_json(r.bounding_side)},
          {"endpoint", endpoint_json(r.endpoint)},
          {"dimension_estimate", r.dimension_estimate}};
}

inline Json rect_json(const Rect& r) { return {{"x0", r.x0}, {"y0", r.y0}, {"x1", r.x1}, {"y1", r.y1}}; }

inline Json certificate_json(const TilingCertificate& c) {
  Json coverage = {{"copies", c.coverage.copies},
                   {"cells_checked", c.coverage.cells_checked},
                   {"fault", to_string(c.coverage.fault)}};
  if (c.coverage.offending_cell) {
    coverage["offending_cell"] = point_json(*c.coverage.offending_cell);
    coverage["multiplicity"] = c.coverage.offending_multiplicity;
  }
  return {{"factorization", factorization_json(c.factorization)},
          {"u", point_json(c.u)},
          {"v", point_json(c.v)},
          {"window", rect_json(c.window)},
          {"coverage", std::move(coverage)},
          {"verified", c.verified}};
}

}  // namespace fibward
