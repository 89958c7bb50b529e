#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "covcs/localfield.hpp"
#include "covcs/scalar.hpp"
#include "covcs/weyl.hpp"

namespace covcs {

inline int ceil_div(int a, int b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// Formal backend: values are FormalScalars in (Q, X, Theta, ...) with
/// Gauss symbols; fractions are RationalExprs.
struct FormalBackend {
  Context ctx;

  using Sc = FormalScalar;
  Sc one() const { return FormalScalar::one(ctx); }
  Sc zero() const { return FormalScalar::zero(ctx); }
  Sc q_half(int e) const { return FormalScalar::q_half_pow(ctx, e); }
  Sc gauss(int l) const { return FormalScalar::gauss_sym(ctx, l); }
  Sc theta_pow(int e) const { return FormalScalar::variable(ctx, var_theta(), e); }
  Sc pow(const Sc& a, int e) const { return a.pow(e); }
  Sc ratio(const Sc& a, const Sc& b) const { return a * b.inverse_monomial(); }
  bool is_zero(const Sc& a) const { return a.is_zero(); }
};

/// Numeric backend over a concrete unramified field model.
struct NumericBackend {
  const FieldParams* F = nullptr;
  std::complex<double> theta{1.0, 0.0};

  using Sc = std::complex<double>;
  Sc one() const { return {1.0, 0.0}; }
  Sc zero() const { return {0.0, 0.0}; }
  Sc q_half(int e) const {
    return detail::cpow_int({std::sqrt(double(F->p())), 0.0}, e);
  }
  Sc gauss(int l) const { return F->gauss_numeric(l); }
  Sc theta_pow(int e) const { return detail::cpow_int(theta, e); }
  Sc pow(const Sc& a, int e) const { return detail::cpow_int(a, e); }
  Sc ratio(const Sc& a, const Sc& b) const { return a / b; }
  bool is_zero(const Sc& a) const { return std::abs(a) < 1e-13; }
};

/// Unramified principal series data for GL_d^{(m,r)}: the per-coordinate
/// values y_i of the inducing character at pi^r, and the cover parameters.
template <typename B>
struct PSParams {
  B back;
  int d = 1;
  int m = 1;
  int r = 1;
  std::vector<typename B::Sc> y;

  PSParams(B b, int d_, int m_, std::vector<typename B::Sc> y_)
      : back(std::move(b)), d(d_), m(m_), r(m_ % 2 == 0 ? m_ / 2 : m_),
        y(std::move(y_)) {
    if (int(y.size()) != d) throw std::invalid_argument("PSParams: y length");
  }

  PSParams twisted(const Perm& w) const {
    PSParams t = *this;
    t.y = act_params(w, y);
    return t;
  }
  PSParams drop_coordinate(int i) const {  // 0-based
    PSParams t = *this;
    t.y.erase(t.y.begin() + i);
    --t.d;
    return t;
  }
};

/// The Theta-representation parameters: y = (q^{(r+1)/2-j} x_i), i = 1..k,
/// j = 1..r, in this order.
inline std::vector<FormalScalar> theta_spec(Context ctx, int k, int r) {
  std::vector<FormalScalar> y;
  y.reserve(size_t(k) * r);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= r; ++j)
      y.push_back(FormalScalar::q_half_pow(ctx, r + 1 - 2 * j) *
                  FormalScalar::variable(ctx, var_x(i)));
  return y;
}

inline std::vector<std::complex<double>> theta_spec_numeric(
    const FieldParams& F, int k, const std::vector<std::complex<double>>& x) {
  int r = F.r();
  double qh = std::sqrt(double(F.p()));
  std::vector<std::complex<double>> y;
  y.reserve(size_t(k) * r);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= r; ++j)
      y.push_back(detail::cpow_int({qh, 0.0}, r + 1 - 2 * j) * x[i - 1]);
  return y;
}

/// Value of the genuine character at t_a for a in rZ^d:
/// prod_i Theta^{a_i/r} y_i^{a_i/r}.
template <typename B>
typename B::Sc char_value(const PSParams<B>& P, const ExpVec& a) {
  typename B::Sc v = P.back.one();
  int tpow = 0;
  for (int i = 0; i < P.d; ++i) {
    if (a[i] % P.r != 0)
      throw std::invalid_argument("char_value: entry not divisible by r");
    int e = a[i] / P.r;
    tpow += e;
    if (e != 0) v = v * P.back.pow(P.y[i], e);
  }
  return v * P.back.theta_pow(tpow);
}

namespace wdetail {

/// delta^{1/2}(t_c)^{-1} (epsilon x theta chi)(t_c)^{-1}: the factor relating
/// tau at a class representative to the requested second index (c in rZ^d).
template <typename B>
typename B::Sc end_correction(const PSParams<B>& P, const ExpVec& c) {
  ExpVec neg(c);
  for (int& v : neg) v = -v;
  return P.back.q_half(modulus_exponent(c, P.d)) * char_value(P, neg);
}

template <typename B>
struct LetterData {
  int i;                   // simple index (0-based)
  typename B::Sc y_alpha;  // value of the suffix-twisted character on alpha
  typename B::Sc den;      // 1 - y_alpha
};

/// Per-letter data of a word: letter j carries the character twisted by the
/// suffix strictly after position j.
template <typename B>
std::vector<LetterData<B>> letter_chain(const PSParams<B>& P,
                                        const ReducedWord& word) {
  std::vector<LetterData<B>> out(word.size());
  std::vector<typename B::Sc> yv = P.y;
  for (int j = int(word.size()) - 1; j >= 0; --j) {
    int i = word[j];
    typename B::Sc ya = P.back.ratio(yv[i], yv[i + 1]);
    out[j] = {i, ya, P.back.one() - ya};
    std::swap(yv[i], yv[i + 1]);  // prepend this letter to the suffix
  }
  return out;
}

/// Forward path expansion of tau from first index `a` through `word`:
/// map from reachable end vector to accumulated amplitude. Amplitudes are
/// relative to the common denominator prod_j (1 - y_alpha at position j);
/// each tau^2 branch is compensated by that position's denominator factor.
template <typename B>
std::map<ExpVec, typename B::Sc> tau_paths(const PSParams<B>& P, const ExpVec& a,
                                           const std::vector<LetterData<B>>& chain) {
  std::map<ExpVec, typename B::Sc> states;
  states.emplace(a, P.back.one());
  for (const auto& L : chain) {
    std::map<ExpVec, typename B::Sc> next;
    auto add = [&](const ExpVec& v, typename B::Sc amp) {
      auto it = next.find(v);
      if (it == next.end()) next.emplace(v, std::move(amp));
      else it->second = it->second + amp;
    };
    for (const auto& [v, amp] : states) {
      int diff = v[L.i + 1] - v[L.i];
      typename B::Sc stay = (P.back.one() - P.back.q_half(-2)) *
                            P.back.pow(L.y_alpha, ceil_div(diff, P.r));
      add(v, amp * stay);
      typename B::Sc bump =
          P.back.q_half(2 * (diff - 1)) * P.back.gauss(2 * (diff - 1)) * L.den;
      add(bracket_step(L.i, v), amp * bump);
    }
    states = std::move(next);
  }
  return states;
}

}  // namespace wdetail

/// tau^1 + tau^2 for a simple reflection at concrete integer vectors a, b,
/// as (numerator, denominator). tau^1 is nonzero iff b = a (mod r):
///   (1-q^{-1}) y_alpha^{ceil((a_{i+1}-a_i)/r)} / (1-y_alpha);
/// tau^2 iff b = w_alpha[a] (mod r):
///   q^{a_{i+1}-a_i-1} g(2(a_{i+1}-a_i-1)).
template <typename B>
std::pair<typename B::Sc, typename B::Sc> tau_simple(const PSParams<B>& P,
                                                     const ExpVec& a,
                                                     const ExpVec& b, int i) {
  using Sc = typename B::Sc;
  Sc ya = P.back.ratio(P.y[i], P.y[i + 1]);
  Sc den = P.back.one() - ya;
  Sc num = P.back.zero();
  auto congruent = [&](const ExpVec& u, const ExpVec& v) {
    for (int t = 0; t < P.d; ++t)
      if (((u[t] - v[t]) % P.r) != 0) return false;
    return true;
  };
  int diff = a[i + 1] - a[i];
  if (congruent(b, a)) {
    ExpVec c(P.d);
    for (int t = 0; t < P.d; ++t) c[t] = b[t] - a[t];
    Sc t1 = (P.back.one() - P.back.q_half(-2)) * P.back.pow(ya, ceil_div(diff, P.r));
    num = num + wdetail::end_correction(P, c) * t1;
  }
  ExpVec wa = bracket_step(i, a);
  if (congruent(b, wa)) {
    ExpVec c(P.d);
    for (int t = 0; t < P.d; ++t) c[t] = b[t] - wa[t];
    Sc t2 = P.back.q_half(2 * (diff - 1)) * P.back.gauss(2 * (diff - 1));
    num = num + wdetail::end_correction(P, c) * t2 * den;
  }
  return {num, den};
}

/// tau_{a,b}(w, theta, chi) along the given reduced word, returned as
/// (numerator, denominator factors).
template <typename B>
std::pair<typename B::Sc, std::vector<typename B::Sc>> tau_general_split(
    const PSParams<B>& P, const ExpVec& a, const ExpVec& b,
    const ReducedWord& word) {
  auto chain = wdetail::letter_chain(P, word);
  auto states = wdetail::tau_paths(P, a, chain);
  typename B::Sc total = P.back.zero();
  for (const auto& [v, amp] : states) {
    bool ok = true;
    ExpVec c(P.d);
    for (int t = 0; t < P.d; ++t) {
      c[t] = b[t] - v[t];
      if (c[t] % P.r != 0) { ok = false; break; }
    }
    if (!ok) continue;
    total = total + amp * wdetail::end_correction(P, c);
  }
  std::vector<typename B::Sc> dens;
  dens.reserve(chain.size());
  for (const auto& L : chain) dens.push_back(L.den);
  return {std::move(total), std::move(dens)};
}

inline RationalExpr tau_general(const PSParams<FormalBackend>& P, const ExpVec& a,
                                const ExpVec& b, const Perm& w) {
  auto [num, dens] = tau_general_split(P, a, b, reduced_word(w));
  FormalScalar den = FormalScalar::one(P.back.ctx);
  for (const auto& f : dens) den *= f;
  return RationalExpr(num, den);
}

inline std::complex<double> tau_general(const PSParams<NumericBackend>& P,
                                        const ExpVec& a, const ExpVec& b,
                                        const Perm& w) {
  auto [num, dens] = tau_general_split(P, a, b, reduced_word(w));
  std::complex<double> v = num;
  for (const auto& f : dens) v /= f;
  return v;
}

/// Gindikin-Karpelevich constant of M(w):
/// prod over inverted positive roots of (1 - q^{-1} y_alpha)/(1 - y_alpha).
inline RationalExpr gk_constant(const PSParams<FormalBackend>& P, const Perm& w) {
  Context ctx = P.back.ctx;
  FormalScalar num = FormalScalar::one(ctx), den = FormalScalar::one(ctx);
  for (auto [i, j] : inversions(w)) {
    FormalScalar u = P.y[i] * P.y[j].inverse_monomial();
    num *= FormalScalar::one(ctx) - FormalScalar::q_half_pow(ctx, -2) * u;
    den *= FormalScalar::one(ctx) - u;
  }
  return RationalExpr(num, den);
}

/// C(s, x) = prod_{alpha in Phi_k^+} (1 - q^{-s} x_alpha).
inline FormalScalar c_poly(Context ctx, int s, int k) {
  FormalScalar out = FormalScalar::one(ctx);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      FormalScalar xa = FormalScalar::variable(ctx, var_x(i)) *
                        FormalScalar::variable(ctx, var_x(j), -1);
      out *= FormalScalar::one(ctx) - FormalScalar::q_pow(ctx, -s) * xa;
    }
  return out;
}

/// l-th complete homogeneous symmetric polynomial in x_1..x_k.
inline FormalScalar p_complete(Context ctx, int l, int k) {
  FormalScalar out = FormalScalar::zero(ctx);
  std::vector<int> e(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == k - 1) {
      e[pos] = rem;
      FormalScalar t = FormalScalar::one(ctx);
      for (int i = 0; i < k; ++i)
        if (e[i]) t *= FormalScalar::variable(ctx, var_x(i + 1), e[i]);
      out += t;
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, l);
  return out;
}

/// The multiplicative Gauss-sum function on words:
/// G(w_alpha, a) = q^{-(a_{i+1}-a_i-1)} g(-2(a_{i+1}-a_i-1)),
/// G(1, a) = 1,  G(w1 w2, a) = G(w1, w2[a]) G(w2, a).
template <typename B>
typename B::Sc script_G(const B& back, const ReducedWord& word, ExpVec a) {
  typename B::Sc acc = back.one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    int diff = a[i + 1] - a[i];
    acc = acc * back.q_half(-2 * (diff - 1)) * back.gauss(-2 * (diff - 1));
    a = bracket_step(i, a);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Weyl-sum Casselman-Shalika formula:
//   W_a(b) = delta_B(t_b) sum_{w in W} prod_{alpha > 0, w alpha > 0}
//            (1 - q^{-1} (^{w^{-1}}y)_alpha) / (1 - (^{w^{-1}}y)_alpha)
//            * tau_{a, b*}(w, theta, ^{w^{-1}}chi).
// ---------------------------------------------------------------------------

inline RationalExpr w_weyl(const PSParams<FormalBackend>& P, const ExpVec& a,
                           const ExpVec& b) {
  Context ctx = P.back.ctx;
  const int d = P.d;
  ExpVec bs = star(b);

  struct Term {
    FormalScalar num;
    std::map<std::string, std::pair<FormalScalar, int>> den;
  };
  std::vector<Term> terms;
  std::map<std::string, std::pair<FormalScalar, int>> common;

  for (const Perm& w : all_permutations(d)) {
    PSParams<FormalBackend> Pw = P.twisted(w.inverse());
    Term t{FormalScalar::one(ctx), {}};
    auto push_den = [&](const FormalScalar& f) {
      auto key = f.str();
      auto it = t.den.find(key);
      if (it == t.den.end()) t.den.emplace(key, std::make_pair(f, 1));
      else it->second.second += 1;
    };
    bool dead = false;
    for (int i = 0; i < d && !dead; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (w(i) > w(j)) continue;
        FormalScalar u = P.y[w(i)] * P.y[w(j)].inverse_monomial();
        FormalScalar nf = FormalScalar::one(ctx) - FormalScalar::q_half_pow(ctx, -2) * u;
        if (nf.is_zero()) { dead = true; break; }
        t.num *= nf;
        push_den(FormalScalar::one(ctx) - u);
      }
    if (dead) continue;
    auto [tnum, tdens] = tau_general_split(Pw, a, bs, reduced_word(w));
    if (tnum.is_zero()) continue;
    t.num *= tnum;
    for (const auto& f : tdens) push_den(f);
    for (const auto& [key, fm] : t.den) {
      auto it = common.find(key);
      if (it == common.end()) common.emplace(key, fm);
      else it->second.second = std::max(it->second.second, fm.second);
    }
    terms.push_back(std::move(t));
  }

  FormalScalar total = FormalScalar::zero(ctx);
  for (auto& t : terms) {
    FormalScalar scaled = std::move(t.num);
    for (const auto& [key, fm] : common) {
      auto it = t.den.find(key);
      int have = it == t.den.end() ? 0 : it->second.second;
      for (int c = have; c < fm.second; ++c) scaled *= fm.first;
    }
    total += scaled;
  }
  FormalScalar denom = FormalScalar::one(ctx);
  for (const auto& [key, fm] : common)
    for (int c = 0; c < fm.second; ++c) denom *= fm.first;
  return RationalExpr(modulus_char(ctx, b, d) * total, denom);
}

inline std::complex<double> w_weyl(const PSParams<NumericBackend>& P,
                                   const ExpVec& a, const ExpVec& b) {
  const int d = P.d;
  ExpVec bs = star(b);
  std::complex<double> total{0.0, 0.0};
  std::complex<double> qinv = 1.0 / double(P.back.F->p());
  for (const Perm& w : all_permutations(d)) {
    std::complex<double> gk{1.0, 0.0};
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (w(i) > w(j)) continue;
        std::complex<double> u = P.y[w(i)] / P.y[w(j)];
        gk *= (1.0 - qinv * u) / (1.0 - u);
      }
    PSParams<NumericBackend> Pw = P.twisted(w.inverse());
    total += gk * tau_general(Pw, a, bs, w);
  }
  return P.back.q_half(-2 * modulus_exponent(b, d)) * total;
}

// ---------------------------------------------------------------------------
// Iterative (rank-recursive) formula:
//   W_a(b) = delta_{B_d}(t_b) sum_{i=0}^{d-1}
//              prod_{j=1}^{d-i-1} (1-q^{-1} y_{(j,d-i)})/(1-y_{(j,d-i)})
//              sum_{e'} tau_{a*, (e'*, -b_1)}(omega_i, theta, ^{omega_i^{-1}}chi)
//                       delta_{B_{d-1}}^{-1}(t_{b'}) W_{e'}(b', chi'[d-i])
// with omega_i = w_{alpha_{d-i}} ... w_{alpha_{d-1}}.
// ---------------------------------------------------------------------------

namespace wdetail {

template <typename B, typename Fr, typename MakeFrac>
Fr w_iterative_impl(const PSParams<B>& P, const ExpVec& a, const ExpVec& b,
                    const MakeFrac& make_frac, const Fr& zero) {
  using Sc = typename B::Sc;
  const int d = P.d;
  const std::vector<Sc> no_dens;
  if (d == 1) {
    ExpVec bs = star(b);
    int c = bs[0] - a[0];
    if (c % P.r != 0) return zero;
    return make_frac(end_correction(P, ExpVec{c}), no_dens);
  }
  const int b1 = b[0];
  const ExpVec bp(b.begin() + 1, b.end());
  // first d-1 coordinates of b* equal star(b')
  int sum_bstar_head = 0;
  for (int j = 1; j < d; ++j) sum_bstar_head -= b[j];

  Fr total = zero;
  for (int i = 0; i <= d - 1; ++i) {
    // prod_{u=1}^{d-i-1} (1-q^{-1} y_{(u,d-i)})/(1-y_{(u,d-i)})
    std::vector<Sc> gknum, gkden;
    bool dead = false;
    for (int u = 1; u <= d - i - 1; ++u) {
      Sc rat = P.back.ratio(P.y[u - 1], P.y[d - i - 1]);
      Sc nf = P.back.one() - P.back.q_half(-2) * rat;
      if (P.back.is_zero(nf)) { dead = true; break; }
      gknum.push_back(nf);
      gkden.push_back(P.back.one() - rat);
    }
    if (dead) continue;

    // omega_i = w_{alpha_{d-i}} ... w_{alpha_{d-1}}; tau_{a,e}(omega_i, ^{omega_i^{-1}}chi)
    ReducedWord omega;
    for (int t = d - 1 - i; t <= d - 2; ++t) omega.push_back(t);
    PSParams<B> Ptw = P.twisted(word_to_perm(d, omega).inverse());
    auto chain = letter_chain(Ptw, omega);
    auto states = tau_paths(Ptw, a, chain);
    std::vector<Sc> taudens;
    for (const auto& L : chain) taudens.push_back(L.den);

    PSParams<B> Psub = P.drop_coordinate(d - i - 1);
    for (const auto& [v, amp] : states) {
      // coordinate d of the remaining rank-(d-1) coefficient must match -b1
      int cd = -b1 - v[d - 1];
      if (cd % P.r != 0) continue;
      int sum_chead = sum_bstar_head;
      for (int j = 0; j + 1 < d; ++j) sum_chead -= v[j];
      // normalization relating the rank-d tau corrections to rank d-1
      Sc norm = P.back.q_half(sum_chead + (1 - d) * cd) *
                P.back.theta_pow(-cd / P.r) *
                P.back.pow(P.y[d - i - 1], -cd / P.r);
      ExpVec vhead(v.begin(), v.end() - 1);
      Fr sub = w_iterative_impl(Psub, vhead, bp, make_frac, zero);
      Sc num = amp * norm;
      for (const auto& f : gknum) num = num * f;
      num = num * P.back.q_half(2 * modulus_exponent(bp, d - 1));
      std::vector<Sc> dens = gkden;
      for (const auto& f : taudens) dens.push_back(f);
      total = total + make_frac(num, dens) * sub;
    }
  }
  return make_frac(P.back.q_half(-2 * modulus_exponent(b, d)), no_dens) * total;
}

}  // namespace wdetail

inline RationalExpr w_iterative(const PSParams<FormalBackend>& P, const ExpVec& a,
                                const ExpVec& b) {
  Context ctx = P.back.ctx;
  auto make_frac = [ctx](const FormalScalar& n, const std::vector<FormalScalar>& dens) {
    FormalScalar d = FormalScalar::one(ctx);
    for (const auto& f : dens) d *= f;
    return RationalExpr(n, d);
  };
  return wdetail::w_iterative_impl<FormalBackend, RationalExpr>(
      P, a, b, make_frac, RationalExpr::zero(ctx));
}

inline std::complex<double> w_iterative(const PSParams<NumericBackend>& P,
                                        const ExpVec& a, const ExpVec& b) {
  auto make_frac = [](const std::complex<double>& n,
                      const std::vector<std::complex<double>>& dens) {
    std::complex<double> v = n;
    for (const auto& f : dens) v /= f;
    return v;
  };
  return wdetail::w_iterative_impl<NumericBackend, std::complex<double>>(
      P, a, b, make_frac, std::complex<double>{0.0, 0.0});
}

}  // namespace covcs
