#pragma once

// Generalized Fibonacci words f_n^[i], their lengths F_n^[i], morphisms,
// characteristic (Sturmian) words and standard sequences.

#include <fibward/exact.hpp>
#include <fibward/word.hpp>

#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fibward {

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

inline void require_index(int n, int min = 0) {
  require(n >= min, "index n must be >= " + std::to_string(min) + ", got " + std::to_string(n));
}

inline void require_family(int i) { require(i >= 1, "family parameter i must be >= 1, got " + std::to_string(i)); }

/// Largest word this library will materialize.
inline constexpr std::size_t max_word_length = std::size_t{1} << 28;

inline std::size_t checked_length(const Integer& len) {
  require(len <= max_word_length, "word of length " + len.str() + " exceeds the materialization limit");
  return len.convert_to<std::size_t>();
}

}  // namespace detail

/// F_n^[i]: F_0 = 1, F_1 = i, F_n = F_{n-1} + F_{n-2}.
inline Integer fib_number(int n, int i) {
  detail::require_index(n);
  detail::require_family(i);
  Integer prev = 1;
  Integer cur = i;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Integer next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// F_n^[i] from the closed golden-ratio expression, evaluated exactly in Q(sqrt 5):
///   ((1-sqrt5)/2)^n (sqrt5 + 1 - 2i) + ((1+sqrt5)/2)^n (sqrt5 - 1 + 2i), over 2 sqrt5.
inline Integer fib_number_closed_form(int n, int i) {
  detail::require_index(n);
  detail::require_family(i);
  using Q5 = QuadraticNumber<5>;
  const Q5 psi{1, -1, 2};
  const Q5 phi{1, 1, 2};
  const Q5 lhs = psi.pow(static_cast<unsigned>(n)) * Q5{1 - 2 * Integer(i), 1};
  const Q5 rhs = phi.pow(static_cast<unsigned>(n)) * Q5{2 * Integer(i) - 1, 1};
  return ((lhs + rhs) / Q5{0, 2}).to_integer();
}

/// The (n,i)-Fibonacci word: f_0 = 0, f_1 = 0^{i-1}1, f_n = f_{n-1} f_{n-2}.
inline BinaryWord fib_word(int n, int i) {
  detail::require_index(n);
  detail::require_family(i);
  detail::checked_length(fib_number(n, i));
  BinaryWord prev = BinaryWord::parse("0");
  if (n == 0) return prev;
  BinaryWord cur = BinaryWord::repeat(0, static_cast<std::size_t>(i - 1));
  cur.push_back(1);
  for (int k = 2; k <= n; ++k) {
    BinaryWord next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Length-`len` prefix of the infinite i-Fibonacci word.
inline BinaryWord fib_word_prefix(int i, std::size_t len) {
  detail::require_family(i);
  detail::require(len <= detail::max_word_length, "prefix length exceeds the materialization limit");
  BinaryWord prev = BinaryWord::parse("0");
  BinaryWord cur = BinaryWord::repeat(0, static_cast<std::size_t>(i - 1));
  cur.push_back(1);
  while (cur.size() < len) {
    BinaryWord next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.prefix(len);
}

/// Classic finite Fibonacci words f_0 = 1, f_1 = 0, f_n = f_{n-1} f_{n-2}.
inline BinaryWord classic_fib_word(int n) {
  detail::require_index(n);
  BinaryWord prev = BinaryWord::parse("1");
  BinaryWord cur = BinaryWord::parse("0");
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    BinaryWord next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// A morphism of {0,1}* given by the images of its two letters.
struct Morphism {
  BinaryWord image_of_0;
  BinaryWord image_of_1;

  [[nodiscard]] BinaryWord operator()(const BinaryWord& w) const {
    BinaryWord out;
    out.reserve(w.count(0) * image_of_0.size() + w.count(1) * image_of_1.size());
    for (auto s : w) out += s == 0 ? image_of_0 : image_of_1;
    return out;
  }
};

inline BinaryWord apply_morphism(const Morphism& m, const BinaryWord& w) { return m(w); }

/// 0 -> 01, 1 -> 0.
inline Morphism fibonacci_morphism() { return {BinaryWord::parse("01"), BinaryWord::parse("0")}; }

/// 0 -> 0, 1 -> 0^k 1. Maps the Fibonacci word onto the (k+2)-Fibonacci word.
inline Morphism zero_padding_morphism(int k) {
  detail::require(k >= 0, "morphism parameter must be >= 0");
  BinaryWord one = BinaryWord::repeat(0, static_cast<std::size_t>(k));
  one.push_back(1);
  return {BinaryWord::parse("0"), std::move(one)};
}

/// Deletes the last two symbols.
inline BinaryWord phi_drop2(const BinaryWord& w) {
  detail::require(w.size() >= 2, "phi_drop2 needs a word of length >= 2");
  return w.prefix(w.size() - 2);
}

/// phi_drop2(w) followed by the last two symbols of w in swapped order.
inline BinaryWord swap_last_two(const BinaryWord& w) {
  BinaryWord out = phi_drop2(w);
  out.push_back(w[w.size() - 1]);
  out.push_back(w[w.size() - 2]);
  return out;
}

/// Number of distinct length-n factors of w.
template <std::uint8_t K>
std::size_t subword_complexity(const Word<K>& w, std::size_t n) {
  detail::require(n <= w.size(), "factor length exceeds word length");
  if (n == 0) return 1;
  std::unordered_set<Word<K>> seen;
  for (std::size_t k = 0; k + n <= w.size(); ++k) seen.insert(w.substr(k, n));
  return seen.size();
}

/// Factor complexity of the infinite i-Fibonacci word at length n, read off a
/// prefix that is doubled until the count stops changing.
inline std::size_t fib_word_complexity(int i, std::size_t n) {
  detail::require_family(i);
  std::size_t len = std::max<std::size_t>(64, 8 * (n + static_cast<std::size_t>(i)));
  std::size_t previous = subword_complexity(fib_word_prefix(i, len), n);
  for (;;) {
    len *= 2;
    const std::size_t current = subword_complexity(fib_word_prefix(i, len), n);
    if (current == previous) return current;
    previous = current;
  }
}

/// The slope (i - phi) / (i^2 - i - 1) of f^[i], as an element of Q(sqrt 5).
inline QuadraticNumber<5> fib_word_slope(int i) {
  detail::require_family(i);
  const Integer ii = i;
  // (i - (1 + sqrt5)/2) / (i^2 - i - 1) = (2i - 1 - sqrt5) / (2(i^2 - i - 1))
  return {2 * ii - 1, -1, 2 * (ii * ii - ii - 1)};
}

/// Characteristic word of slope alpha: w(n) = floor((n+1) alpha) - floor(n alpha),
/// for n = 1..len, with every floor evaluated exactly.
inline BinaryWord characteristic_word(const QuadraticNumber<5>& alpha, std::size_t len) {
  detail::require(len <= detail::max_word_length, "length exceeds the materialization limit");
  BinaryWord out;
  out.reserve(len);
  Integer previous = alpha.floor();
  for (std::size_t n = 1; n <= len; ++n) {
    Integer next = (alpha * QuadraticNumber<5>{Integer(n + 1)}).floor();
    const Integer jump = next - previous;
    detail::require(jump == 0 || jump == 1, "slope outside (0,1)");
    out.push_back(jump == 1 ? 1 : 0);
    previous = std::move(next);
  }
  return out;
}

inline BinaryWord characteristic_word(int i, std::size_t len) {
  detail::require(len >= 1, "characteristic word length must be >= 1");
  return characteristic_word(fib_word_slope(i), len);
}

/// Directive sequence d_1, d_2, ... described by a finite head followed by a
/// periodic tail (an empty tail makes the sequence finite).
class DirectiveSequence {
 public:
  DirectiveSequence(std::vector<int> head, std::vector<int> period = {})
      : head_(std::move(head)), period_(std::move(period)) {
    for (std::size_t k = 0; k < head_.size(); ++k) {
      detail::require(head_[k] > 0 || (k == 0 && head_[k] == 0),
                      "directive terms must be positive (d_1 may be 0)");
    }
    // Periodic terms recur at indices > 1, so they must all be positive.
    for (int d : period_) detail::require(d > 0, "directive terms must be positive");
    detail::require(!head_.empty() || !period_.empty(), "empty directive sequence");
  }

  /// d_n for n >= 1.
  [[nodiscard]] int term(int n) const {
    detail::require(n >= 1, "directive terms are indexed from 1");
    const auto k = static_cast<std::size_t>(n - 1);
    if (k < head_.size()) return head_[k];
    detail::require(!period_.empty(), "directive sequence has only " + std::to_string(head_.size()) + " terms");
    return period_[(k - head_.size()) % period_.size()];
  }

 private:
  std::vector<int> head_;
  std::vector<int> period_;
};

/// Directive of the slope [0, i, 1, 1, ...]: (i-1, 1, 1, ...).
inline DirectiveSequence fib_word_directive(int i) {
  detail::require_family(i);
  return {{i - 1}, {1}};
}

/// Directive of the slope [0, a, b, a, b, ...]: (a-1, b, a, b, ...).
inline DirectiveSequence ab_directive(int a, int b) {
  detail::require(a >= 1 && b >= 1, "a and b must be >= 1");
  return {{a - 1}, {b, a}};
}

/// s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}.
inline BinaryWord standard_sequence(const DirectiveSequence& d, int n) {
  detail::require_index(n, -1);
  BinaryWord prev = BinaryWord::parse("1");
  BinaryWord cur = BinaryWord::parse("0");
  if (n == -1) return prev;
  for (int k = 1; k <= n; ++k) {
    BinaryWord next = cur.power(static_cast<std::size_t>(d.term(k))) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// F_n^(a,b): F_0 = 0, F_1 = 1, F_n = a F_{n-1} + F_{n-2} (n even), b F_{n-1} + F_{n-2} (n odd).
inline Integer ab_fib_number(int a, int b, int n) {
  detail::require(a >= 1 && b >= 1, "a and b must be >= 1");
  detail::require_index(n);
  Integer prev = 0;
  Integer cur = 1;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Integer next = (k % 2 == 0 ? a : b) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// s_0 = 1, s_1 = 0, s_2 = 0^{a-1}1, s_n = s_{n-1}^a s_{n-2} (n even), s_{n-1}^b s_{n-2} (n odd).
inline BinaryWord ab_fib_word(int a, int b, int n) {
  detail::require(a >= 1 && b >= 1, "a and b must be >= 1");
  detail::require_index(n);
  if (n == 0) return BinaryWord::parse("1");
  if (n == 1) return BinaryWord::parse("0");
  BinaryWord prev = BinaryWord::parse("0");
  BinaryWord cur = BinaryWord::repeat(0, static_cast<std::size_t>(a - 1));
  cur.push_back(1);
  for (int k = 3; k <= n; ++k) {
    const auto reps = static_cast<std::size_t>(k % 2 == 0 ? a : b);
    detail::require(cur.size() * reps + prev.size() <= detail::max_word_length,
                    "word exceeds the materialization limit");
    BinaryWord next = cur.power(reps) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fibward
