#pragma once

// Exact integers and exact arithmetic in real quadratic fields Q(sqrt(D)).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibward {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Floor division for integers (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// A number (a + b*sqrt(D)) / c with integer a, b and c > 0, kept reduced.
/// D must be a positive non-square; every comparison and floor is exact.
template <int D>
class QuadraticNumber {
  static_assert(D > 1, "D must be a positive non-square");

 public:
  QuadraticNumber() = default;
  QuadraticNumber(Integer a, Integer b = 0, Integer c = 1) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (c_ == 0) throw std::domain_error("QuadraticNumber with zero denominator");
    normalize();
  }

  static QuadraticNumber sqrt_d() { return {0, 1, 1}; }

  [[nodiscard]] const Integer& rational_part() const { return a_; }
  [[nodiscard]] const Integer& surd_part() const { return b_; }
  [[nodiscard]] const Integer& denominator() const { return c_; }

  [[nodiscard]] bool is_integer() const { return b_ == 0 && c_ == 1; }

  [[nodiscard]] Integer to_integer() const {
    if (!is_integer()) throw std::domain_error("QuadraticNumber is not an integer");
    return a_;
  }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a_, -x.b_, x.c_}; }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ * y.a_ + D * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_};
  }
  /// Division by a nonzero rational integer.
  friend QuadraticNumber operator/(const QuadraticNumber& x, const Integer& k) {
    if (k == 0) throw std::domain_error("QuadraticNumber division by zero");
    return {x.a_, x.b_, x.c_ * k};
  }
  /// Division by another quadratic number, via the conjugate.
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Integer norm = y.a_ * y.a_ - D * y.b_ * y.b_;  // times c^2
    if (norm == 0) throw std::domain_error("QuadraticNumber division by zero");
    QuadraticNumber conj{y.a_ * y.c_, -y.b_ * y.c_, 1};
    return (x * conj) / norm;
  }

  [[nodiscard]] QuadraticNumber pow(unsigned n) const {
    QuadraticNumber result{1};
    QuadraticNumber base = *this;
    while (n != 0) {
      if (n & 1U) result = result * base;
      base = base * base;
      n >>= 1U;
    }
    return result;
  }

  /// floor((a + b sqrt D) / c), exact. Uses floor(x / c) = floor(floor(x) / c)
  /// for integer c > 0, and an integer square root for floor(b sqrt D).
  [[nodiscard]] Integer floor() const {
    Integer surd_floor = 0;
    if (b_ != 0) {
      Integer root = boost::multiprecision::sqrt(Integer(b_ * b_ * D));
      surd_floor = b_ > 0 ? root : Integer(-root - 1);
    }
    return floor_div(a_ + surd_floor, c_);
  }

  [[nodiscard]] int sign() const {
    if (a_ == 0 && b_ == 0) return 0;
    if (a_ >= 0 && b_ >= 0) return 1;
    if (a_ <= 0 && b_ <= 0) return -1;
    // Opposite signs: compare a^2 with D b^2.
    const Integer lhs = a_ * a_;
    const Integer rhs = D * b_ * b_;
    const int a_dominates = lhs > rhs ? 1 : -1;
    return a_ > 0 ? a_dominates : -a_dominates;
  }

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }

  [[nodiscard]] double to_double() const {
    return (a_.template convert_to<double>() + b_.template convert_to<double>() * std::sqrt(double(D))) /
           c_.template convert_to<double>();
  }

 private:
  void normalize() {
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a_), abs(b_)), c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  Integer a_ = 0;
  Integer b_ = 0;
  Integer c_ = 1;
};

}  // namespace fibward
