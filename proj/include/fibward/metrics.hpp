#pragma once

// Generalized Pell numbers and the closed forms for snowflake endpoints,
// perimeter, area, bounding square and self-similarity dimension.

#include <fibward/exact.hpp>
#include <fibward/snowflake.hpp>
#include <fibward/wordgen.hpp>

#include <cmath>
#include <numbers>

namespace fibward {

/// P^[i](0) = -i, P^[i](1) = i + 1, P^[i](n) = 2 P^[i](n-1) + P^[i](n-2).
inline Integer pell_number(int n, int i) {
  detail::require_index(n);
  detail::require(i >= 0, "Pell parameter i must be >= 0, got " + std::to_string(i));
  Integer prev = -i;
  if (n == 0) return prev;
  Integer cur = i + 1;
  for (int k = 2; k <= n; ++k) {
    Integer next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// P^[i](n) = ((1+sqrt2)^n (sqrt2 - (2 - 2sqrt2) i) - (1-sqrt2)^n (sqrt2 + (2 + 2sqrt2) i)) / 4,
/// evaluated exactly in Q(sqrt 2).
inline Integer pell_number_closed_form(int n, int i) {
  detail::require_index(n);
  detail::require(i >= 0, "Pell parameter i must be >= 0, got " + std::to_string(i));
  using Q2 = QuadraticNumber<2>;
  const Integer ii = i;
  const Q2 up{1, 1};
  const Q2 down{1, -1};
  const Q2 c_up{-2 * ii, 1 + 2 * ii};
  const Q2 c_down{2 * ii, 1 + 2 * ii};
  const Q2 value = (c_up * up.pow(static_cast<unsigned>(n)) - c_down * down.pow(static_cast<unsigned>(n))) / Integer(4);
  return value.to_integer();
}

/// The Pell parameter tied to family i: (i-2)/2 for even i, (i-3)/2 for odd i.
inline int family_k(int i) {
  detail::require(i >= 2, "snowflake metrics need i >= 2, got " + std::to_string(i));
  return i % 2 == 0 ? (i - 2) / 2 : (i - 3) / 2;
}

struct EndpointVector {
  Integer x = 0;
  Integer y = 0;
  friend bool operator==(const EndpointVector&, const EndpointVector&) = default;
};

/// Closed-form final point of Sigma°_0(q_n^[i]) traced from the origin.
/// Writing n = 3m + 1 + r and s = (-1)^m, with P = P^[k]:
///   even i: r=0 (P(m+1)+P(m), 0), r=1 (P(m+1), s P(m+1)), r=2 (P(m+2), s P(m+1));
///   odd i:  r=0 (P(m+1)+P(m), 0) for even m, (0, P(m+1)+P(m)) for odd m;
///           r=1 (P(m+2), P(m+1)) for even m, (P(m+1), P(m+2)) for odd m;
///           r=2 (P(m+2), P(m+2)).
inline EndpointVector endpoint_formula(int n, int i) {
  detail::require_index(n, 1);
  const int k = family_k(i);
  const int m = (n - 1) / 3;
  const int r = (n - 1) % 3;
  const auto p = [&](int j) { return pell_number(j, k); };
  if (i % 2 == 0) {
    const Integer s = m % 2 == 0 ? 1 : -1;
    switch (r) {
      case 0: return {p(m + 1) + p(m), 0};
      case 1: return {p(m + 1), s * p(m + 1)};
      default: return {p(m + 2), s * p(m + 1)};
    }
  }
  const bool even_m = m % 2 == 0;
  switch (r) {
    case 0: return even_m ? EndpointVector{p(m + 1) + p(m), 0} : EndpointVector{0, p(m + 1) + p(m)};
    case 1: return even_m ? EndpointVector{p(m + 2), p(m + 1)} : EndpointVector{p(m + 1), p(m + 2)};
    default: return {p(m + 2), p(m + 2)};
  }
}

/// Final point of Sigma°_0(q_n^[i]) by direct tracing.
inline EndpointVector endpoint_trace(int n, int i) {
  detail::require_index(n, 1);
  const Point d = displacement(sigma_circ(0, q_word(n, i).word));
  return {d.x, d.y};
}

/// 4 F_{3n-1}^[i] for even i, 4 F_{3n+1}^[i] for odd i.
inline Integer perimeter(int n, int i) {
  detail::require_index(n, 1);
  detail::require_family(i);
  return 4 * fib_number(i % 2 == 0 ? 3 * n - 1 : 3 * n + 1, i);
}

/// P(n+1)^2 + P(n)^2 for even i, P(n+2)^2 + P(n+1)^2 for odd i, with P = P^[k].
inline Integer area(int n, int i) {
  detail::require_index(n, 1);
  const int k = family_k(i);
  const int top = i % 2 == 0 ? n + 1 : n + 2;
  const Integer a = pell_number(top, k);
  const Integer b = pell_number(top - 1, k);
  return a * a + b * b;
}

/// Side of the smallest axis-parallel square containing the snowflake:
/// 2 P(n+1) - 1 for even i, P(n+1) + P(n+2) for odd i.
inline Integer bounding_square_side(int n, int i) {
  detail::require_index(n, 1);
  const int k = family_k(i);
  if (i % 2 == 0) return 2 * pell_number(n + 1, k) - 1;
  return pell_number(n + 1, k) + pell_number(n + 2, k);
}

inline Integer bounding_square(int n, int i) {
  const Integer side = bounding_square_side(n, i);
  return side * side;
}

/// 3 ln(phi) / ln(1 + sqrt 2).
inline double dimension_limit() { return 3.0 * std::log(std::numbers::phi) / std::log(1.0 + std::numbers::sqrt2); }

/// ln(perimeter) / ln(bounding side), both exact until the logarithms.
inline double dimension_estimate(int i, int n) {
  const Integer per = perimeter(n, i);
  const Integer side = bounding_square_side(n, i);
  detail::require(side > 1, "bounding side must exceed 1");
  return std::log(per.convert_to<double>()) / std::log(side.convert_to<double>());
}

struct MetricsReport {
  int n = 0;
  int i = 0;
  Integer perimeter;
  Integer area;
  Integer bounding_side;
  EndpointVector endpoint;  // of Sigma°_0(q) for the q word bounding the snowflake
  double dimension_estimate = 0;
};

inline MetricsReport metrics_report(int n, int i) {
  return {n,
          i,
          perimeter(n, i),
          area(n, i),
          bounding_square_side(n, i),
          endpoint_formula(snowflake_q_index(n, i), i),
          dimension_estimate(i, n)};
}

}  // namespace fibward
