#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace klstab {

using i64 = std::int64_t;

/// Exact fraction kept in lowest terms with a positive denominator.
/// Ordering cross-multiplies in 128 bits, so comparisons of any int64
/// operands are exact and never touch floating point.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 value) : num(value) {}
  Rational(i64 numerator, i64 denominator) : num(numerator), den(denominator) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

namespace detail {
inline __int128 rational_cross(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
}
}  // namespace detail

inline bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
  return detail::rational_cross(a, b) < 0;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline Rational operator-(const Rational& a) {
  Rational r;
  r.num = -a.num;
  r.den = a.den;
  return r;
}
inline Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}
inline Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw std::domain_error("Rational: division by zero");
  return Rational(a.num * b.den, a.den * b.num);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace klstab
