#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace covcs {

/// Diagonal entry of a torus element over an unramified local field, modeled
/// as pi^val * unit with the unit given by its residue class in (Z/p)^*.
struct TorusEntry {
  int val = 0;
  long long unit = 1;

  friend bool operator==(const TorusEntry&, const TorusEntry&) = default;
};

using TorusElement = std::vector<TorusEntry>;

/// An unramified p-adic field with mu_{2m} in F^*: residue field Z/p with
/// p = 1 (mod 2m), the m-th power-residue character through a fixed least
/// primitive root, and exact numeric Gauss sums for the unramified psi of
/// conductor 0 and vol(O) = 1.
class FieldParams {
 public:
  FieldParams(long long p, int m) : p_(p), m_(m) {
    if (m < 1) throw std::invalid_argument("FieldParams: m must be positive");
    r_ = (m % 2 == 0) ? m / 2 : m;
    if (!is_prime(p)) throw std::invalid_argument("FieldParams: p must be prime");
    if ((p - 1) % (2 * m) != 0)
      throw std::invalid_argument("FieldParams: requires p = 1 (mod 2m)");
    g_ = least_primitive_root(p);
    // discrete logs of u^{(p-1)/m} against g^{(p-1)/m}, for power_residue
    long long e = (p_ - 1) / m_;
    long long ge = pow_mod(g_, e, p_);
    long long cur = 1;
    dlog_.assign(size_t(p_), -1);
    for (int j = 0; j < m_; ++j) {
      dlog_[size_t(cur)] = j;
      cur = mul_mod(cur, ge, p_);
    }
  }

  long long p() const { return p_; }
  int m() const { return m_; }
  int r() const { return r_; }
  long long g() const { return g_; }

  /// Smallest prime p = 1 (mod 2m).
  static long long default_prime(int m) {
    for (long long p = 2 * m + 1;; p += 2 * m)
      if (is_prime(p)) return p;
  }

  /// omega(u) as an exponent j (mod m): u^{(p-1)/m} = g^{j(p-1)/m} (mod p).
  int power_residue(long long u) const {
    u %= p_;
    if (u < 0) u += p_;
    if (u == 0) throw std::invalid_argument("power_residue: zero unit");
    long long v = pow_mod(u, (p_ - 1) / m_, p_);
    int j = dlog_[size_t(v)];
    if (j < 0) throw std::logic_error("power_residue: not an m-th power trace");
    return j;
  }

  /// m-th Hilbert symbol exponent via the tame symbol,
  /// (a, b)_m = omega((-1)^{v(a)v(b)} u_a^{v(b)} u_b^{-v(a)}).
  int hilbert(const TorusEntry& a, const TorusEntry& b) const {
    long long t = 1;
    if ((a.val & 1) && (b.val & 1)) t = p_ - 1;  // (-1)^{v(a) v(b)}
    t = mul_mod(t, pow_mod_signed(a.unit, b.val), p_);
    t = mul_mod(t, pow_mod_signed(b.unit, -a.val), p_);
    return power_residue(t);
  }

  std::complex<double> zeta_m(int j) const {
    double ang = 2.0 * M_PI * double(((j % m_) + m_) % m_) / double(m_);
    return {std::cos(ang), std::sin(ang)};
  }

  /// Exact numeric Gauss sum g(l) = p^{-1} sum_{u in (Z/p)^*} omega(u)^l e(u/p).
  std::complex<double> gauss_numeric(int l) const {
    std::complex<double> acc{0.0, 0.0};
    for (long long u = 1; u < p_; ++u) {
      double ang = 2.0 * M_PI * double(u) / double(p_);
      acc += zeta_m(l * power_residue(u)) * std::complex<double>{std::cos(ang), std::sin(ang)};
    }
    return acc / double(p_);
  }

  static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static long long pow_mod(long long b, long long e, long long mod) {
    b %= mod;
    if (b < 0) b += mod;
    long long acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul_mod(acc, b, mod);
      b = mul_mod(b, b, mod);
      e >>= 1;
    }
    return acc;
  }

  static long long mul_mod(long long a, long long b, long long mod) {
    return (long long)((__int128)a * b % mod);
  }

  static long long inv_mod(long long a, long long mod) {
    return pow_mod(a, mod - 2, mod);
  }

 private:
  long long pow_mod_signed(long long base, long long e) const {
    if (e >= 0) return pow_mod(base, e, p_);
    return pow_mod(inv_mod(base % p_ < 0 ? base % p_ + p_ : base % p_, p_), -e, p_);
  }

  static long long least_primitive_root(long long p) {
    std::vector<long long> prime_factors;
    long long n = p - 1;
    for (long long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) prime_factors.push_back(n);
    for (long long g = 2; g < p; ++g) {
      bool ok = true;
      for (long long f : prime_factors)
        if (pow_mod(g, (p - 1) / f, p) == 1) { ok = false; break; }
      if (ok) return g;
    }
    throw std::logic_error("no primitive root");
  }

  long long p_;
  int m_;
  int r_;
  long long g_;
  std::vector<int> dlog_;
};

/// Exact model of elements of the unramified field as rational numbers;
/// closed under the arithmetic needed to evaluate the Kubota 2-cocycle on
/// 2x2 matrices (sums, products, determinants), with exact p-adic valuation
/// and unit-residue extraction.
struct PadicRational {
  long long num = 0;
  long long den = 1;

  PadicRational() = default;
  PadicRational(long long n) : num(n), den(1) {}
  PadicRational(long long n, long long d) : num(n), den(d) { reduce(); }

  bool is_zero() const { return num == 0; }

  void reduce() {
    if (den == 0) throw std::domain_error("PadicRational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend PadicRational operator+(const PadicRational& a, const PadicRational& b) {
    return make((__int128)a.num * b.den + (__int128)b.num * a.den,
                (__int128)a.den * b.den);
  }
  friend PadicRational operator-(const PadicRational& a, const PadicRational& b) {
    return make((__int128)a.num * b.den - (__int128)b.num * a.den,
                (__int128)a.den * b.den);
  }
  friend PadicRational operator*(const PadicRational& a, const PadicRational& b) {
    return make((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend PadicRational operator/(const PadicRational& a, const PadicRational& b) {
    if (b.num == 0) throw std::domain_error("PadicRational: division by zero");
    return make((__int128)a.num * b.den, (__int128)a.den * b.num);
  }

  int valuation(long long p) const {
    if (num == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    long long n = num < 0 ? -num : num;
    while (n % p == 0) { n /= p; ++v; }
    long long d = den;
    while (d % p == 0) { d /= p; --v; }
    return v;
  }

  /// Residue class mod p of the unit part num/den * p^{-val}.
  long long unit_residue(long long p) const {
    int v = valuation(p);
    long long n = num, d = den;
    for (int i = 0; i < v; ++i) n /= p;
    for (int i = 0; i < -v; ++i) d /= p;
    long long nn = n % p; if (nn < 0) nn += p;
    long long dd = d % p; if (dd < 0) dd += p;
    return FieldParams::mul_mod(nn, FieldParams::inv_mod(dd, p), p);
  }

  TorusEntry to_entry(long long p) const {
    return TorusEntry{valuation(p), unit_residue(p)};
  }

 private:
  static PadicRational make(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    PadicRational r;
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
