#pragma once

// Finite words over small numeric alphabets.
//
// BinaryWord holds the i-Fibonacci words and their prefixes; PathWord holds
// Freeman-coded lattice paths (0 = east, 1 = north, 2 = west, 3 = south).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibward {

template <std::uint8_t K>
class Word {
  static_assert(K >= 2 && K <= 10, "alphabet must be representable by decimal digits");

 public:
  using symbol_type = std::uint8_t;
  static constexpr symbol_type alphabet_size = K;

  Word() = default;

  explicit Word(std::vector<symbol_type> symbols) : symbols_(std::move(symbols)) {
    for (auto s : symbols_) check_symbol(s);
  }

  Word(std::initializer_list<symbol_type> symbols) : Word(std::vector<symbol_type>(symbols)) {}

  /// Parses a string of decimal digits. Symbols outside the alphabet are
  /// rejected, never reduced.
  static Word parse(std::string_view text) {
    Word w;
    w.symbols_.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c >= static_cast<char>('0' + K)) {
        throw std::invalid_argument("invalid symbol '" + std::string(1, c) + "' for alphabet of size " +
                                    std::to_string(K));
      }
      w.symbols_.push_back(static_cast<symbol_type>(c - '0'));
    }
    return w;
  }

  /// `count` copies of `symbol`.
  static Word repeat(symbol_type symbol, std::size_t count) {
    check_symbol(symbol);
    Word w;
    w.symbols_.assign(count, symbol);
    return w;
  }

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] symbol_type operator[](std::size_t k) const { return symbols_[k]; }
  [[nodiscard]] symbol_type front() const { return symbols_.front(); }
  [[nodiscard]] symbol_type back() const { return symbols_.back(); }
  [[nodiscard]] std::span<const symbol_type> symbols() const noexcept { return symbols_; }
  [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
  [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

  void reserve(std::size_t n) { symbols_.reserve(n); }

  void push_back(symbol_type s) {
    check_symbol(s);
    symbols_.push_back(s);
  }

  Word& operator+=(const Word& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
  }

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  [[nodiscard]] Word substr(std::size_t pos, std::size_t len) const {
    if (pos > size()) throw std::out_of_range("Word::substr position past end");
    len = std::min(len, size() - pos);
    Word w;
    w.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
  }

  [[nodiscard]] Word prefix(std::size_t len) const { return substr(0, len); }

  [[nodiscard]] Word reversed() const {
    Word w = *this;
    std::reverse(w.symbols_.begin(), w.symbols_.end());
    return w;
  }

  /// The word concatenated with itself `k` times.
  [[nodiscard]] Word power(std::size_t k) const {
    Word w;
    w.symbols_.reserve(size() * k);
    for (std::size_t j = 0; j < k; ++j) w += *this;
    return w;
  }

  /// Cyclic rotation: the conjugate starting at position `r mod size()`.
  [[nodiscard]] Word rotated(std::size_t r) const {
    if (empty()) return *this;
    r %= size();
    Word w;
    w.symbols_.reserve(size());
    w.symbols_.insert(w.symbols_.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(r), symbols_.end());
    w.symbols_.insert(w.symbols_.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(r));
    return w;
  }

  [[nodiscard]] std::size_t count(symbol_type s) const {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
  }

  [[nodiscard]] std::string str() const {
    std::string out(symbols_.size(), '0');
    std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                   [](symbol_type s) { return static_cast<char>('0' + s); });
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

 private:
  static void check_symbol(symbol_type s) {
    if (s >= K) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(K));
    }
  }

  std::vector<symbol_type> symbols_;
};

using BinaryWord = Word<2>;
using PathWord = Word<4>;

template <std::uint8_t K>
[[nodiscard]] bool is_palindrome(const Word<K>& w) {
  const auto s = w.symbols();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

/// Length of the longest common prefix.
template <std::uint8_t K>
[[nodiscard]] std::size_t common_prefix_length(const Word<K>& u, const Word<K>& v) {
  const auto n = std::min(u.size(), v.size());
  std::size_t k = 0;
  while (k < n && u[k] == v[k]) ++k;
  return k;
}

/// True if `needle` occurs as a factor of `haystack`.
template <std::uint8_t K>
[[nodiscard]] bool contains_factor(const Word<K>& haystack, const Word<K>& needle) {
  const auto h = haystack.symbols();
  const auto n = needle.symbols();
  return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

}  // namespace fibward

template <std::uint8_t K>
struct std::hash<fibward::Word<K>> {
  std::size_t operator()(const fibward::Word<K>& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto s : w) h = (h ^ s) * 1099511628211ULL;
    return h;
  }
};
