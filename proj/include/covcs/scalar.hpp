#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covcs/rational.hpp"

namespace covcs {

/// Global configuration for the value domain: the cover degree m (Gauss-sum
/// residue classes live mod m) and whether Theta is a sign (Theta^2 = 1) or a
/// free variable.
struct Context {
  int m = 1;
  bool theta_sign = true;

  friend bool operator==(const Context& a, const Context& b) {
    return a.m == b.m && a.theta_sign == b.theta_sign;
  }
};

/// Symbol tags. Q = q^{1/2}, S = q^{-s}, X(i) = x_i = chi_i(pi^r),
/// Xp(i) = x'_i (second inducing character), Mu(i) = mu_i(pi^r),
/// Theta = theta(pi^r).
enum class Tag : uint8_t { Q = 0, S = 1, Theta = 2, Mu = 3, X = 4, Xp = 5 };

struct VarId {
  Tag tag;
  int index;  // >= 1 for X/Xp/Mu, 0 otherwise

  VarId(Tag t, int i = 0) : tag(t), index(i) {}
  int code() const { return (int(tag) << 16) | index; }
  friend bool operator==(const VarId& a, const VarId& b) { return a.code() == b.code(); }
  friend bool operator<(const VarId& a, const VarId& b) { return a.code() < b.code(); }

  std::string str() const {
    switch (tag) {
      case Tag::Q: return "Q";
      case Tag::S: return "S";
      case Tag::Theta: return "T";
      case Tag::Mu: return "m" + std::to_string(index);
      case Tag::X: return "x" + std::to_string(index);
      case Tag::Xp: return "u" + std::to_string(index);
    }
    return "?";
  }
};

inline VarId var_q() { return VarId(Tag::Q); }
inline VarId var_s() { return VarId(Tag::S); }
inline VarId var_theta() { return VarId(Tag::Theta); }
inline VarId var_x(int i) { return VarId(Tag::X, i); }
inline VarId var_xp(int i) { return VarId(Tag::Xp, i); }
inline VarId var_mu(int i) { return VarId(Tag::Mu, i); }

/// Sorted (code, exponent) pairs, no zero exponents.
using Monomial = std::vector<std::pair<int, int>>;

/// Sorted (residue class, multiplicity) pairs in normal form: classes in
/// 1..m-1, at most one of {l, m-l} present, multiplicity of m/2 at most 1.
using GaussMonomial = std::vector<std::pair<int, int>>;

struct TermKey {
  Monomial mono;
  GaussMonomial gauss;

  friend bool operator<(const TermKey& a, const TermKey& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.gauss < b.gauss;
  }
  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.mono == b.mono && a.gauss == b.gauss;
  }
};

/// Numeric assignment for the complex backend.
struct NumericAssignment {
  std::complex<double> q_half{0.0, 0.0};  // value of Q
  std::complex<double> s{0.0, 0.0};       // value of S = q^{-s}
  std::complex<double> theta{1.0, 0.0};
  std::vector<std::complex<double>> x, xp, mu;  // x[i-1] assigns X(i)
  std::function<std::complex<double>(int)> gauss;  // value of g(l), l mod m
};

namespace detail {

inline std::complex<double> cpow_int(std::complex<double> base, int e) {
  if (e == 0) return {1.0, 0.0};
  bool inv = e < 0;
  unsigned long long n = inv ? -(long long)e : (long long)e;
  std::complex<double> acc{1.0, 0.0};
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return inv ? 1.0 / acc : acc;
}

}  // namespace detail

/// Multivariate Laurent polynomial over Q with formal Gauss-sum symbol
/// coefficients. Gauss normal form is restored after every multiplication.
class FormalScalar {
 public:
  FormalScalar() = default;
  explicit FormalScalar(Context ctx) : ctx_(ctx) {}

  static FormalScalar zero(Context ctx) { return FormalScalar(ctx); }
  static FormalScalar constant(Context ctx, Rat c) {
    FormalScalar f(ctx);
    if (!c.is_zero()) f.terms_[TermKey{}] = c;
    return f;
  }
  static FormalScalar one(Context ctx) { return constant(ctx, Rat(1)); }

  static FormalScalar variable(Context ctx, VarId v, int exp = 1) {
    FormalScalar f(ctx);
    TermKey k;
    if (exp != 0) k.mono.push_back({v.code(), exp});
    f.canonicalize_key(k);
    f.terms_[k] = Rat(1);
    return f;
  }

  /// Q^e, i.e. q^{e/2}.
  static FormalScalar q_half_pow(Context ctx, int e) {
    return variable(ctx, var_q(), e);
  }
  /// q^e = Q^{2e}.
  static FormalScalar q_pow(Context ctx, int e) {
    return variable(ctx, var_q(), 2 * e);
  }

  /// The reduced Gauss symbol g(l)^mult (total normal form, may produce
  /// scalar factors): g(0-class) = -q^{-1};
  /// g(l) g(m-l) = q^{-1}; for even m, g(m/2)^2 = q^{-1}.
  static FormalScalar gauss_sym(Context ctx, int cls, int mult = 1);

  const Context& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<TermKey, Rat>& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }
  /// True for a single gauss-free term (an invertible Laurent monomial).
  bool is_unit_monomial() const {
    return terms_.size() == 1 && terms_.begin()->first.gauss.empty();
  }

  void add_term(TermKey k, Rat c) {
    if (c.is_zero()) return;
    canonicalize_key(k);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend FormalScalar operator+(const FormalScalar& a, const FormalScalar& b) {
    a.check(b);
    FormalScalar r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend FormalScalar operator-(const FormalScalar& a, const FormalScalar& b) {
    a.check(b);
    FormalScalar r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  FormalScalar operator-() const {
    FormalScalar r(ctx_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  friend FormalScalar operator*(const FormalScalar& a, const FormalScalar& b) {
    a.check(b);
    FormalScalar r(a.ctx_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        Rat c = ca * cb;
        TermKey k = mul_keys(a.ctx_, ka, kb, c);
        r.add_term(std::move(k), c);
      }
    }
    return r;
  }
  FormalScalar& operator+=(const FormalScalar& b) { *this = *this + b; return *this; }
  FormalScalar& operator-=(const FormalScalar& b) { *this = *this - b; return *this; }
  FormalScalar& operator*=(const FormalScalar& b) { *this = *this * b; return *this; }

  FormalScalar scaled(Rat c) const {
    FormalScalar r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
  }

  /// Integer power; negative exponents require a unit monomial.
  FormalScalar pow(int e) const {
    if (e == 0) return one(ctx_);
    if (e < 0) return inverse_monomial().pow(-e);
    FormalScalar acc = one(ctx_);
    FormalScalar base = *this;
    unsigned n = unsigned(e);
    while (n) {
      if (n & 1) acc *= base;
      if (n >>= 1) base *= base;
    }
    return acc;
  }

  /// Inverse of a unit monomial (single gauss-free term).
  FormalScalar inverse_monomial() const {
    if (!is_unit_monomial())
      throw std::domain_error("FormalScalar: inverse of a non-monomial");
    const auto& [k, c] = *terms_.begin();
    FormalScalar r(ctx_);
    TermKey ki;
    for (auto [code, e] : k.mono) ki.mono.push_back({code, -e});
    r.canonicalize_key(ki);
    r.terms_[ki] = Rat(1) / c;
    return r;
  }

  friend bool operator==(const FormalScalar& a, const FormalScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalScalar& a, const FormalScalar& b) {
    return !(a == b);
  }

  std::complex<double> evaluate(const NumericAssignment& as) const {
    std::complex<double> total{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
      std::complex<double> t{c.to_double(), 0.0};
      for (auto [code, e] : k.mono) {
        Tag tag = Tag(code >> 16);
        int idx = code & 0xffff;
        std::complex<double> v;
        switch (tag) {
          case Tag::Q: v = as.q_half; break;
          case Tag::S: v = as.s; break;
          case Tag::Theta: v = as.theta; break;
          case Tag::X:
            if (idx < 1 || size_t(idx) > as.x.size())
              throw std::out_of_range("evaluate: unassigned X variable");
            v = as.x[idx - 1];
            break;
          case Tag::Xp:
            if (idx < 1 || size_t(idx) > as.xp.size())
              throw std::out_of_range("evaluate: unassigned Xp variable");
            v = as.xp[idx - 1];
            break;
          case Tag::Mu:
            if (idx < 1 || size_t(idx) > as.mu.size())
              throw std::out_of_range("evaluate: unassigned Mu variable");
            v = as.mu[idx - 1];
            break;
        }
        t *= detail::cpow_int(v, e);
      }
      for (auto [cls, mult] : k.gauss) {
        if (!as.gauss) throw std::out_of_range("evaluate: no Gauss assignment");
        t *= detail::cpow_int(as.gauss(cls), mult);
      }
      total += t;
    }
    return total;
  }

  /// Canonical sorted-term text form, deterministic across runs.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (auto [code, e] : k.mono) {
        VarId v(Tag(code >> 16), code & 0xffff);
        os << "*" << v.str();
        if (e != 1) os << "^" << e;
      }
      for (auto [cls, mult] : k.gauss) {
        os << "*g" << cls;
        if (mult != 1) os << "^" << mult;
      }
    }
    return os.str();
  }

 private:
  void check(const FormalScalar& b) const {
    if (!(ctx_ == b.ctx_))
      throw std::invalid_argument("FormalScalar: context mismatch");
  }

  void canonicalize_key(TermKey& k) const {
    if (ctx_.theta_sign) {
      for (auto it = k.mono.begin(); it != k.mono.end();) {
        if (Tag(it->first >> 16) == Tag::Theta) {
          int e = ((it->second % 2) + 2) % 2;
          if (e == 0) { it = k.mono.erase(it); continue; }
          it->second = e;
        }
        ++it;
      }
    }
    std::sort(k.mono.begin(), k.mono.end());
  }

  /// Merge two term keys; Gauss normal form may emit a scalar factor that is
  /// folded into `coeff` and the Q exponent of the product key.
  static TermKey mul_keys(const Context& ctx, const TermKey& a, const TermKey& b,
                          Rat& coeff) {
    TermKey r;
    // merge monomials (sorted)
    size_t i = 0, j = 0;
    while (i < a.mono.size() || j < b.mono.size()) {
      if (j == b.mono.size() || (i < a.mono.size() && a.mono[i].first < b.mono[j].first)) {
        r.mono.push_back(a.mono[i++]);
      } else if (i == a.mono.size() || b.mono[j].first < a.mono[i].first) {
        r.mono.push_back(b.mono[j++]);
      } else {
        int e = a.mono[i].second + b.mono[j].second;
        if (e != 0) r.mono.push_back({a.mono[i].first, e});
        ++i; ++j;
      }
    }
    if (!a.gauss.empty() || !b.gauss.empty()) {
      std::map<int, int> raw;
      for (auto [cls, mult] : a.gauss) raw[cls] += mult;
      for (auto [cls, mult] : b.gauss) raw[cls] += mult;
      int qhalf = 0;
      int sign = 1;
      r.gauss = reduce_gauss(ctx.m, raw, sign, qhalf);
      if (sign < 0) coeff = -coeff;
      if (qhalf != 0) add_exp(r.mono, var_q().code(), qhalf);
    }
    if (ctx.theta_sign) {
      // theta exponents were canonical in both factors; sum may need reduction
      for (auto it = r.mono.begin(); it != r.mono.end();) {
        if (Tag(it->first >> 16) == Tag::Theta) {
          int e = ((it->second % 2) + 2) % 2;
          if (e == 0) { it = r.mono.erase(it); continue; }
          it->second = e;
        }
        ++it;
      }
      std::sort(r.mono.begin(), r.mono.end());
    }
    return r;
  }

  static void add_exp(Monomial& mono, int code, int e) {
    for (auto& [c, ex] : mono) {
      if (c == code) {
        ex += e;
        if (ex == 0)
          mono.erase(std::remove_if(mono.begin(), mono.end(),
                                    [&](auto& p) { return p.first == code; }),
                     mono.end());
        return;
      }
    }
    mono.push_back({code, e});
    std::sort(mono.begin(), mono.end());
  }

  /// Reduce a raw residue-class multiplicity map mod m to normal form.
  /// Emits sign and Q-exponent factors: class 0 -> -q^{-1} per power,
  /// paired classes {l, m-l} -> q^{-1} per pair, g(m/2)^2 -> q^{-1}.
  static GaussMonomial reduce_gauss(int m, std::map<int, int>& raw, int& sign,
                                    int& qhalf) {
    std::map<int, int> folded;
    for (auto [cls, mult] : raw) {
      if (mult == 0) continue;
      if (mult < 0) throw std::domain_error("Gauss symbol with negative power");
      int l = ((cls % m) + m) % m;
      folded[l] += mult;
    }
    auto it0 = folded.find(0);
    if (it0 != folded.end()) {
      if (it0->second % 2 == 1) sign = -sign;
      qhalf += -2 * it0->second;
      folded.erase(it0);
    }
    GaussMonomial out;
    for (int l = 1; 2 * l <= m; ++l) {
      int ml = m - l;
      auto a = folded.find(l), b = folded.find(ml);
      int na = a == folded.end() ? 0 : a->second;
      int nb = b == folded.end() ? 0 : b->second;
      if (l == ml) {
        // g(m/2)^2 = q^{-1}
        int pairs = na / 2;
        qhalf += -2 * pairs;
        na %= 2;
        if (na) out.push_back({l, na});
      } else {
        int t = std::min(na, nb);
        qhalf += -2 * t;
        na -= t;
        nb -= t;
        if (na) out.push_back({l, na});
        if (nb) out.push_back({ml, nb});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend FormalScalar gauss_reduce(Context ctx,
                                   const std::vector<std::pair<int, int>>& raw);

  Context ctx_;
  std::map<TermKey, Rat> terms_;
};

/// Normal form of an arbitrary product of Gauss symbols g(l)^mult with
/// integer residue classes l. Total: always succeeds.
inline FormalScalar gauss_reduce(Context ctx,
                                 const std::vector<std::pair<int, int>>& raw) {
  std::map<int, int> map;
  for (auto [cls, mult] : raw) map[cls] += mult;
  int sign = 1, qhalf = 0;
  GaussMonomial g = FormalScalar::reduce_gauss(ctx.m, map, sign, qhalf);
  FormalScalar f(ctx);
  TermKey k;
  if (qhalf != 0) k.mono.push_back({var_q().code(), qhalf});
  k.gauss = std::move(g);
  f.add_term(std::move(k), Rat(sign));
  return f;
}

inline FormalScalar FormalScalar::gauss_sym(Context ctx, int cls, int mult) {
  return gauss_reduce(ctx, {{cls, mult}});
}

/// Formal fraction of FormalScalars. Equality is decided by
/// cross-multiplication; no GCD normalization is attempted.
class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(FormalScalar n)
      : num_(std::move(n)), den_(FormalScalar::one(num_.ctx())) {}
  RationalExpr(FormalScalar n, FormalScalar d)
      : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RationalExpr: zero denominator");
  }

  static RationalExpr one(Context ctx) {
    return RationalExpr(FormalScalar::one(ctx));
  }
  static RationalExpr zero(Context ctx) {
    return RationalExpr(FormalScalar::zero(ctx), FormalScalar::one(ctx));
  }

  const FormalScalar& num() const { return num_; }
  const FormalScalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
    if (b.num_.is_zero()) throw std::domain_error("RationalExpr: division by zero");
    return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalExpr operator-() const { return RationalExpr(-num_, den_); }
  RationalExpr& operator+=(const RationalExpr& b) { *this = *this + b; return *this; }
  RationalExpr& operator*=(const RationalExpr& b) { *this = *this * b; return *this; }

  std::complex<double> evaluate(const NumericAssignment& as,
                                double pole_tol = 1e-12) const {
    std::complex<double> d = den_.evaluate(as);
    if (std::abs(d) < pole_tol)
      throw std::domain_error("RationalExpr: pole at evaluation point");
    return num_.evaluate(as) / d;
  }

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

  FormalScalar num_;
  FormalScalar den_;
};

/// true iff a.num * b.den == b.num * a.den.
inline bool frac_eq(const RationalExpr& a, const RationalExpr& b) {
  if (a.den().is_zero() || b.den().is_zero())
    throw std::domain_error("frac_eq: zero denominator");
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace covcs
