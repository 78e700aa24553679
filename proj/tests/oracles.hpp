#pragma once

// Naive reference implementations. They work on plain strings and
// coordinates and share no code with the library beyond its public types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<long long, long long>;

inline int digit(char c) { return c - '0'; }
inline char symbol(int v) { return static_cast<char>('0' + ((v % 4) + 4) % 4); }

inline std::string fib_word(int n, int i) {
  std::string a = "0";
  std::string b = std::string(static_cast<std::size_t>(i - 1), '0') + "1";
  if (n == 0) return a;
  for (int k = 2; k <= n; ++k) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

inline std::string partial_sums(int alpha, const std::string& w, bool drop_last) {
  std::string out(1, symbol(alpha));
  int acc = alpha;
  for (char c : w) {
    acc += digit(c);
    out += symbol(acc);
  }
  if (drop_last) out.pop_back();
  return out;
}

inline std::string hat(const std::string& w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out += symbol(digit(*it) + 2);
  return out;
}

inline std::pair<long long, long long> step(char c) {
  switch (c) {
    case '0': return {1, 0};
    case '1': return {0, 1};
    case '2': return {-1, 0};
    default: return {0, -1};
  }
}

inline std::vector<Cell> trace(const std::string& w) {
  std::vector<Cell> pts{{0, 0}};
  for (char c : w) {
    auto [dx, dy] = step(c);
    pts.push_back({pts.back().first + dx, pts.back().second + dy});
  }
  return pts;
}

inline bool closed(const std::string& w) {
  return std::count(w.begin(), w.end(), '0') == std::count(w.begin(), w.end(), '2') &&
         std::count(w.begin(), w.end(), '1') == std::count(w.begin(), w.end(), '3');
}

/// No proper nonempty factor is closed, and the whole word is not a two-step retrace.
inline bool simple_by_factors(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len)
      if (len < w.size() && closed(w.substr(i, len))) return false;
  return !(w.size() == 2 && closed(w));
}

inline long long shoelace_twice(const std::string& w) {
  const auto pts = trace(w);
  long long acc = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    acc += pts[k].first * pts[k + 1].second - pts[k + 1].first * pts[k].second;
  return acc;
}

/// Cells whose centre is inside the contour, by counting boundary edges
/// crossed by a ray going right from the centre.
inline std::set<Cell> cells_by_ray(const std::string& w) {
  const auto pts = trace(w);
  long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (auto [x, y] : pts) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  std::set<Cell> cells;
  for (long long y = y0; y < y1; ++y) {
    for (long long x = x0; x < x1; ++x) {
      int crossings = 0;
      for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const auto [ax, ay] = pts[k];
        const auto [bx, by] = pts[k + 1];
        if (ax == bx && ax > x && std::min(ay, by) == y) ++crossings;
      }
      if (crossings % 2 == 1) cells.insert({x, y});
    }
  }
  return cells;
}

/// Every rotation and every cut, compared as strings; classes are the sets of
/// four cut positions.
inline std::set<std::vector<std::size_t>> bn_square_classes(const std::string& b) {
  const std::size_t len = b.size();
  const std::size_t h = len / 2;
  std::set<std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < len; ++r) {
    const std::string u = b.substr(r) + b.substr(0, r);
    for (std::size_t a = 1; a < h; ++a) {
      const std::string A = u.substr(0, a);
      const std::string B = u.substr(a, h - a);
      if (u.substr(h, a) == hat(A) && u.substr(h + a) == hat(B)) {
        std::vector<std::size_t> cut{r % len, (r + a) % len, (r + h) % len, (r + h + a) % len};
        std::sort(cut.begin(), cut.end());
        classes.insert(cut);
      }
    }
  }
  return classes;
}

/// Multiplicity of every window cell under translates m u + n v, |m|, |n| <= reach.
inline std::map<Cell, int> coverage(const std::set<Cell>& tile, Cell u, Cell v, long long reach, long long wx0,
                                    long long wy0, long long wx1, long long wy1) {
  std::map<Cell, int> count;
  for (long long y = wy0; y < wy1; ++y)
    for (long long x = wx0; x < wx1; ++x) count[{x, y}] = 0;
  for (long long m = -reach; m <= reach; ++m) {
    for (long long n = -reach; n <= reach; ++n) {
      for (auto [x, y] : tile) {
        const Cell c{x + m * u.first + n * v.first, y + m * u.second + n * v.second};
        auto it = count.find(c);
        if (it != count.end()) ++it->second;
      }
    }
  }
  return count;
}

}  // namespace oracle
