#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace covcs {

/// Exact rational number over 64-bit integers (128-bit intermediates).
/// Denominator is kept positive and the fraction reduced.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  static Rat half(long long twice) { return Rat(twice, 2); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return from128(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return from128(n, d);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }

  double to_double() const { return double(num) / double(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

private:
  static Rat from128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr __int128 lim = (__int128)1 << 62;
    if (n >= lim || n <= -lim || d >= lim)
      throw std::overflow_error("Rat: 64-bit overflow");
    Rat r;
    r.num = (long long)n;
    r.den = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
};

}  // namespace covcs
