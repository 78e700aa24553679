#pragma once

// The full property suite behind `fibward verify`, and its CONFORMANCE.md
// rendering. Each row states a claim, what it is checked against, the range
// covered and the outcome. INFO rows record observations that do not count
// as failures.

#include <fibward/curve.hpp>
#include <fibward/metrics.hpp>
#include <fibward/snowflake.hpp>
#include <fibward/tiling.hpp>
#include <fibward/wordgen.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fibward {

enum class Status { pass, fail, info };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::info: return "INFO";
  }
  return "?";
}

struct CheckResult {
  std::string claim;
  std::string ref;
  std::string range;
  Status status = Status::pass;
  std::string detail;

  CheckResult(std::string claim_, std::string ref_, std::string range_, Status status_ = Status::pass,
              std::string detail_ = {})
      : claim(std::move(claim_)), ref(std::move(ref_)), range(std::move(range_)), status(status_),
        detail(std::move(detail_)) {}

  /// Keeps the first failure message.
  void fail(const std::string& message) {
    if (status == Status::fail) return;
    status = Status::fail;
    detail = message;
  }
};

struct VerifyOptions {
  int max_n = 3;         // snowflake order
  int max_i = 6;         // family parameter
  int word_max_n = 14;   // word and q-word index
  int curve_max_n = 15;  // curve index
  bool geometry = true;  // snowflake, factorization and tiling checks
};

namespace detail {

inline std::string at(int i, int n) { return "i=" + std::to_string(i) + ", n=" + std::to_string(n); }

inline std::string span(const char* var, int lo, int hi) {
  return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

inline std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace detail

inline std::vector<CheckResult> word_checks(const VerifyOptions& o) {
  using detail::at;
  using detail::span;
  std::vector<CheckResult> out;
  const int wn = o.word_max_n;

  {
    CheckResult c{"closed form of F_n^[i] equals the recurrence", "exact evaluation in Q(sqrt5)",
                  span("n", 0, 40) + ", " + span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i)
      for (int n = 0; n <= 40; ++n)
        if (fib_number(n, i) != fib_number_closed_form(n, i)) c.fail("closed form differs at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"|f_n^[i]| = F_n^[i]", "word length vs recurrence", span("n", 0, 15) + ", " + span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i)
      for (int n = 0; n <= 15; ++n)
        if (Integer(fib_word(n, i).size()) != fib_number(n, i)) c.fail("length law fails at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"11 is not a factor of f_n^[i]", "factor scan", span("n", 0, wn) + ", " + span("i", 2, o.max_i)};
    const BinaryWord eleven = BinaryWord::parse("11");
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 0; n <= wn; ++n)
        if (contains_factor(fib_word(n, i), eleven)) c.fail("11 occurs at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"f_n^[i] ends in 10 for even n and 01 for odd n", "last two symbols",
                  span("n", 1, wn) + ", " + span("i", 2, o.max_i) + "; n=2.." + std::to_string(wn) + " for i=1"};
    for (int i = 1; i <= o.max_i; ++i) {
      for (int n = i == 1 ? 2 : 1; n <= wn; ++n) {
        const BinaryWord f = fib_word(n, i);
        const std::string tail = f.substr(f.size() - 2, 2).str();
        if (tail != (n % 2 == 0 ? "10" : "01")) c.fail("suffix " + tail + " at " + at(i, n));
      }
    }
    out.push_back(c);
  }
  {
    CheckResult c{"f_{n-1}f_{n-2} and f_{n-2}f_{n-1} agree on exactly F_n - 2 symbols", "common prefix length",
                  span("n", 2, wn) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i) {
      for (int n = 2; n <= wn; ++n) {
        const BinaryWord a = fib_word(n - 1, i);
        const BinaryWord b = fib_word(n - 2, i);
        const std::size_t lcp = common_prefix_length(a + b, b + a);
        if (Integer(lcp) != fib_number(n, i) - 2) c.fail("common prefix " + std::to_string(lcp) + " at " + at(i, n));
      }
    }
    out.push_back(c);
  }
  {
    CheckResult c{"f_n^[i] without its last two symbols is a palindrome", "reversal",
                  span("n", 1, wn) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 1; n <= wn; ++n)
        if (!is_palindrome(phi_drop2(fib_word(n, i)))) c.fail("not a palindrome at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"f_n = f_{n-3} f_{n-3} f_{n-6} l_{n-3} l_{n-3}", "symbolwise comparison",
                  span("n", 6, wn) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 6; n <= wn; ++n)
        if (!decomposition_check(i, n)) c.fail("decomposition fails at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"0 -> 0, 1 -> 0^i 1 maps f_n onto f_{n-1}^[i+2]", "morphism image vs generator",
                  span("n", 2, wn) + ", " + span("i", 0, 4)};
    for (int i = 0; i <= 4; ++i)
      for (int n = 2; n <= wn; ++n)
        if (apply_morphism(zero_padding_morphism(i), classic_fib_word(n)) != fib_word(n - 1, i + 2))
          c.fail("morphism identity fails at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"characteristic word of slope (i - phi)/(i^2 - i - 1) equals f^[i]", "exact floors, length 10000",
                  span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i)
      if (characteristic_word(i, 10000) != fib_word_prefix(i, 10000)) c.fail("slope identity fails at i=" + std::to_string(i));
    out.push_back(c);
  }
  {
    CheckResult c{"f^[i] has n + 1 factors of length n", "factor count on a stabilized prefix",
                  span("n", 1, 8) + ", " + span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i)
      for (std::size_t n = 1; n <= 8; ++n)
        if (fib_word_complexity(i, n) != n + 1) c.fail("complexity differs at " + at(i, static_cast<int>(n)));
    out.push_back(c);
  }
  {
    CheckResult c{"standard sequence of directive (i-1, 1, 1, ...) gives f_n^[i]", "word equality",
                  span("n", 0, wn) + ", " + span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i)
      for (int n = 0; n <= wn; ++n)
        if (standard_sequence(fib_word_directive(i), n) != fib_word(n, i)) c.fail("standard sequence differs at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"|s_n| of the (a,b) word is F_n^(a,b)", "length vs recurrence", "n=0..12, a,b=1..5"};
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b)
        for (int n = 0; n <= 12; ++n)
          if (n >= 1 && Integer(ab_fib_word(a, b, n).size()) != ab_fib_number(a, b, n))
            c.fail("length differs at a=" + std::to_string(a) + ", b=" + std::to_string(b) + ", n=" + std::to_string(n));
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> q_word_checks(const VerifyOptions& o) {
  using detail::at;
  using detail::span;
  std::vector<CheckResult> out;
  const int wn = o.word_max_n;
  {
    CheckResult c{"|q_n^[i]| = F_{n-1}^[i] over {1,3}", "length and alphabet", span("n", 1, wn) + ", " + span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i) {
      for (int n = 1; n <= wn; ++n) {
        const PathWord q = q_word(n, i).word;
        if (Integer(q.size()) != fib_number(n - 1, i)) c.fail("length differs at " + at(i, n));
        if (q.count(0) + q.count(2) != 0) c.fail("symbol outside {1,3} at " + at(i, n));
      }
    }
    out.push_back(c);
  }
  {
    CheckResult c{"Delta(q_n) alpha_{n-1} is f_{n-1}^[i] over {0,2}", "word equality", span("n", 2, wn) + ", " + span("i", 1, o.max_i)};
    for (int i = 1; i <= o.max_i; ++i)
      for (int n = 2; n <= wn; ++n)
        if (!q_limit_check(n, i)) c.fail("q limit identity fails at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"q_n is a palindrome or antipalindrome followed by one symbol", "split by n mod 3",
                  span("n", 1, wn) + ", " + span("i", 1, o.max_i)};
    CheckResult variant{"bar(sigma_m) final symbol variant for odd i", "generated q words", span("n", 1, wn) + ", odd i",
                        Status::info, ""};
    std::vector<std::string> cases;
    for (int i = 1; i <= o.max_i; ++i) {
      for (int n = 1; n <= wn; ++n) {
        const PalReport r = pal_structure(n, i);
        if (!r.body_ok) c.fail(std::string("body is not a ") + to_string(r.expected_kind) + ", case " + r.case_name() + ", " + at(i, n));
        if (!r.final_ok) c.fail("final symbol " + std::to_string(r.final_symbol) + ", case " + r.case_name() + ", " + at(i, n));
        if (r.reference_final != r.final_symbol && i % 2 == 1) {
          const std::string name = r.case_name();
          if (std::find(cases.begin(), cases.end(), name) == cases.end()) cases.push_back(name);
        }
      }
    }
    out.push_back(c);
    if (!cases.empty()) {
      std::string list;
      for (const auto& s : cases) list += (list.empty() ? "" : ", ") + s;
      variant.detail = "for odd i the words end in sigma_m, not bar(sigma_m), in cases " + list;
      out.push_back(variant);
    }
  }
  {
    CheckResult c{"Sigma_alpha(q_n) is simple", "vertex revisits", "alpha=0..3, " + span("n", 1, 12) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 1; n <= 12; ++n)
        for (int alpha = 0; alpha < 4; ++alpha)
          if (!is_simple(sigma(alpha, q_word(n, i).word))) c.fail("not simple at alpha=" + std::to_string(alpha) + ", " + at(i, n));
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> snowflake_checks(const VerifyOptions& o) {
  using detail::at;
  using detail::span;
  std::vector<CheckResult> out;
  const std::string range = span("n", 1, o.max_n) + ", " + span("i", 2, o.max_i);
  CheckResult boundary{"snowflake word is a boundary word", "closure and vertex revisits", range};
  CheckResult per{"perimeter 4F_{3n-1} (even i), 4F_{3n+1} (odd i)", "boundary length", range};
  CheckResult area_c{"area P(n+1)^2 + P(n)^2 (even i), P(n+2)^2 + P(n+1)^2 (odd i)", "scanline cell count", range};
  CheckResult shoe{"cell count equals shoelace area", "signed area of the traced boundary", range};
  CheckResult side{"bounding side 2P(n+1) - 1 (even i), P(n+1) + P(n+2) (odd i)", "bounding box of the cells", range};
  CheckResult dsq{"snowflake has exactly two square BN-factorizations", "cut-set classes", range};
  CheckResult pal{"square factors A and B are palindromes", "reversal", range};
  CheckResult second{"conjugate q word bounds a congruent tile", "cells up to translation and rotation", range};
  CheckResult tiles{"both factorizations tile a window exactly", "multiplicity scan, window 3x bounding box", range};
  CheckResult lattices{"the two tiling lattices differ", "Hermite normal form", range};
  CheckResult dets{"|det(u, v)| equals the area", "integer determinant", range};

  for (int i = 2; i <= o.max_i; ++i) {
    for (int n = 1; n <= o.max_n; ++n) {
      const PathWord b = boundary_word(n, i);
      if (!is_boundary_word(b)) {
        boundary.fail("not a boundary word at " + at(i, n));
        continue;
      }
      if (Integer(b.size()) != perimeter(n, i)) per.fail("length " + std::to_string(b.size()) + " at " + at(i, n));
      const Polyomino p = build_polyomino(b);
      if (Integer(p.area()) != area(n, i)) area_c.fail("cell count " + std::to_string(p.area()) + " at " + at(i, n));
      if (std::abs(signed_area_twice(trace(b))) != 2 * static_cast<std::int64_t>(p.area())) shoe.fail("shoelace differs at " + at(i, n));
      const CellBox box = p.bounding_box();
      if (Integer(std::max(box.width(), box.height())) != bounding_square_side(n, i))
        side.fail("bounding side " + std::to_string(std::max(box.width(), box.height())) + " at " + at(i, n));
      const auto fs = bn_square_factorizations(b);
      if (fs.size() != 2) dsq.fail(std::to_string(fs.size()) + " classes at " + at(i, n));
      for (const auto& f : fs)
        if (!factor_palindromicity(f)) pal.fail("non-palindromic factor at " + at(i, n));
      const PathWord b2 = second_boundary(n, i);
      if (!is_boundary_word(b2) || !congruent(p, build_polyomino(b2))) second.fail("second boundary differs at " + at(i, n));

      std::vector<TilingCertificate> certs;
      for (const auto& f : fs) certs.push_back(certify(p, f));
      for (const auto& cert : certs) {
        if (!cert.verified) {
          std::string why = "no candidate lattice covers the window at " + at(i, n);
          if (cert.coverage.offending_cell)
            why += ", " + std::string(to_string(cert.coverage.fault)) + " at (" + std::to_string(cert.coverage.offending_cell->x) +
                   ", " + std::to_string(cert.coverage.offending_cell->y) + ")";
          tiles.fail(why);
          continue;
        }
        if (std::abs(det(cert.u, cert.v)) != static_cast<std::int64_t>(p.area())) dets.fail("determinant differs at " + at(i, n));
      }
      if (certs.size() == 2 && certs[0].verified && certs[1].verified &&
          same_lattice(certs[0].u, certs[0].v, certs[1].u, certs[1].v))
        lattices.fail("both tilings share a lattice at " + at(i, n));
    }
  }
  for (auto* c : {&boundary, &per, &area_c, &shoe, &side, &dsq, &pal, &second, &tiles, &lattices, &dets}) out.push_back(*c);

  {
    CheckResult c{"i = 1 snowflake word", "vertex revisits", "n=1.." + std::to_string(o.max_n), Status::info, ""};
    int simple = 0;
    for (int n = 1; n <= o.max_n; ++n) simple += is_boundary_word(boundary_word(n, 1)) ? 1 : 0;
    c.detail = std::to_string(simple) + " of " + std::to_string(o.max_n) +
               " are boundary words; the i = 1 path touches itself at vertices";
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> metric_checks(const VerifyOptions& o) {
  using detail::at;
  using detail::span;
  std::vector<CheckResult> out;
  {
    CheckResult c{"closed form of P^[i](n) equals the recurrence", "exact evaluation in Q(sqrt2)", span("n", 0, 40) + ", " + span("i", 0, 5)};
    for (int i = 0; i <= 5; ++i)
      for (int n = 0; n <= 40; ++n)
        if (pell_number(n, i) != pell_number_closed_form(n, i)) c.fail("closed form differs at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"endpoint of Sigma°_0(q_n) from Pell numbers", "traced endpoint", span("n", 1, o.word_max_n) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 1; n <= o.word_max_n; ++n)
        if (!(endpoint_formula(n, i) == endpoint_trace(n, i))) c.fail("endpoint differs at " + at(i, n));
    out.push_back(c);
  }
  {
    const EndpointVector e = endpoint_trace(14, 4);
    CheckResult c{"reference endpoint (46, 6) for i=4, q_14", "traced endpoint", "single entry", Status::info,
                  "trace gives (" + e.x.str() + ", " + e.y.str() + ")"};
    out.push_back(c);
  }
  {
    CheckResult c{"A(n) = 6A(n-1) - A(n-2)", "area formula", span("n", 3, 10) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 3; n <= 10; ++n)
        if (area(n, i) != 6 * area(n - 1, i) - area(n - 2, i)) c.fail("recurrence fails at " + at(i, n));
    out.push_back(c);
  }
  {
    const double est = dimension_estimate(2, 10);
    CheckResult c{"dimension estimate approaches 3 ln(phi) / ln(1 + sqrt2)", "within 0.05 at i=2, n=10", "i=2, n=10"};
    c.detail = "estimate " + detail::fixed(est) + ", limit " + detail::fixed(dimension_limit());
    if (std::abs(est - dimension_limit()) > 0.05) c.fail(c.detail);
    out.push_back(c);
  }
  {
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 2; i <= o.max_i; ++i) {
      const double e = dimension_estimate(i, 12);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    CheckResult c{"dimension estimates across i at n = 12", "spread of ln(perimeter)/ln(side)", span("i", 2, o.max_i),
                  Status::info, "spread " + detail::fixed(hi - lo) + "; estimates converge like 1/n"};
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> curve_checks(const VerifyOptions& o) {
  using detail::at;
  using detail::span;
  std::vector<CheckResult> out;
  const int cn = o.curve_max_n;
  {
    CheckResult c{"curve segments have length 1 or 2", "maximal straight runs", span("n", 1, cn) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 1; n <= cn; ++n)
        for (std::size_t s : segments(fractal_curve(n, i)))
          if (s < 1 || s > 2) c.fail("segment of length " + std::to_string(s) + " at " + at(i, n));
    out.push_back(c);
  }
  {
    CheckResult c{"scale factor L_n / L_{n-3} is 1 + sqrt2", "within 2% at n=15", span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i) {
      const double s = scale_factor(i, 15);
      if (std::abs(s / (1 + std::numbers::sqrt2) - 1) > 0.02) c.fail("scale factor " + detail::fixed(s) + " at " + at(i, 15));
    }
    out.push_back(c);
  }
  {
    CheckResult c{"L_n = 2L_{n-3} + L_{n-6}", "endpoint distances, i=2", "n=9, 12, 15, 18"};
    for (int n = 9; n <= 18; n += 3) {
      const double ln = endpoint_distance(fractal_curve(n, 2));
      const double rhs = 2 * endpoint_distance(fractal_curve(n - 3, 2)) + endpoint_distance(fractal_curve(n - 6, 2));
      if (std::abs(ln - rhs) > 1e-9 * rhs) c.fail("recurrence off at " + at(2, n));
    }
    out.push_back(c);
  }
  {
    CheckResult c{"curve without its last step is line or point symmetric by n mod 3", "lattice isometries on edges",
                  span("n", 3, cn) + ", " + span("i", 2, o.max_i)};
    for (int i = 2; i <= o.max_i; ++i)
      for (int n = 3; n <= cn; ++n) {
        const Symmetry s = symmetry_class(curve_body(fractal_curve(n, i)));
        if (s != expected_body_symmetry(n, i)) c.fail(std::string(to_string(s)) + " at " + at(i, n));
      }
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& o = {}) {
  detail::require(o.max_n >= 1 && o.max_i >= 2, "verify needs max-n >= 1 and max-i >= 2");
  std::vector<CheckResult> out;
  const auto append = [&](const std::vector<CheckResult>& group) { out.insert(out.end(), group.begin(), group.end()); };
  append(word_checks(o));
  append(q_word_checks(o));
  if (o.geometry) append(snowflake_checks(o));
  append(metric_checks(o));
  append(curve_checks(o));
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == Status::fail; });
}

inline std::string conformance_markdown(const std::vector<CheckResult>& rows, const VerifyOptions& o) {
  std::ostringstream os;
  os << "# Conformance\n\n"
     << "Generated by `fibward verify" << (o.geometry ? " --all" : "") << " --max-n " << o.max_n << " --max-i " << o.max_i << "`.\n\n"
     << "| claim | ref | range | status |\n|---|---|---|---|\n";
  const auto cell = [](std::string s) {
    std::string out;
    for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
    return out;
  };
  for (const auto& r : rows)
    os << "| " << cell(r.claim) << " | " << cell(r.ref) << " | " << r.range << " | " << to_string(r.status) << " |\n";
  bool notes = false;
  for (const auto& r : rows) {
    if (r.detail.empty()) continue;
    if (!notes) os << "\n## Notes\n\n";
    notes = true;
    os << "- " << to_string(r.status) << ", " << r.claim << ": " << r.detail << "\n";
  }
  return os.str();
}

}  // namespace fibward
