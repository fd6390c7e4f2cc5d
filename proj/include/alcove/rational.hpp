#pragma once

// Exact rational arithmetic on 64-bit integers.  All core computations in
// this library run on these; floating point appears only in SVG layout.
// Invariants: gcd(num,den)==1, den>0, zero is 0/1.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace alcove {

struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  // floor(num/den), exact for negatives as well
  std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  double approx() const { return double(num) / double(den); }
};

namespace detail {
inline std::int64_t narrow(__int128 v) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
    throw std::overflow_error("rational arithmetic overflow");
  return std::int64_t(v);
}
// build a Rat from 128-bit num/den, reducing before narrowing
inline Rat make_reduced(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) { __int128 t = a % b; a = b; b = t; }
  if (a > 1) { n /= a; d /= a; }
  Rat r;
  r.num = narrow(n);
  r.den = narrow(d);
  if (r.num == 0) r.den = 1;
  return r;
}
} // namespace detail

inline Rat operator+(const Rat& x, const Rat& y) {
  return detail::make_reduced(__int128(x.num) * y.den + __int128(y.num) * x.den,
                              __int128(x.den) * y.den);
}
inline Rat operator-(const Rat& x, const Rat& y) {
  return detail::make_reduced(__int128(x.num) * y.den - __int128(y.num) * x.den,
                              __int128(x.den) * y.den);
}
inline Rat operator*(const Rat& x, const Rat& y) {
  return detail::make_reduced(__int128(x.num) * y.num, __int128(x.den) * y.den);
}
inline Rat operator/(const Rat& x, const Rat& y) {
  if (y.num == 0) throw std::domain_error("rational division by zero");
  return detail::make_reduced(__int128(x.num) * y.den, __int128(x.den) * y.num);
}
inline Rat operator-(const Rat& x) { Rat r; r.num = -x.num; r.den = x.den; return r; }

inline Rat& operator+=(Rat& x, const Rat& y) { return x = x + y; }
inline Rat& operator-=(Rat& x, const Rat& y) { return x = x - y; }
inline Rat& operator*=(Rat& x, const Rat& y) { return x = x * y; }
inline Rat& operator/=(Rat& x, const Rat& y) { return x = x / y; }

inline bool operator==(const Rat& x, const Rat& y) {
  return x.num == y.num && x.den == y.den;  // both normalized
}
inline bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
inline bool operator<(const Rat& x, const Rat& y) {
  return __int128(x.num) * y.den < __int128(y.num) * x.den;
}
inline bool operator>(const Rat& x, const Rat& y) { return y < x; }
inline bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
inline bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

inline Rat abs(const Rat& x) { return x.num < 0 ? -x : x; }

} // namespace alcove
