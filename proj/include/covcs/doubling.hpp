#pragma once

#include <stdexcept>
#include <vector>

#include "covcs/rational.hpp"
#include "covcs/satake.hpp"
#include "covcs/scalar.hpp"
#include "covcs/whittaker.hpp"

namespace covcs {

/// Parameters of one doubling computation. The s-slot of every sub-integral
/// is tracked as an exact rational multiple lambda of the top-level s; all
/// L-arguments stay of the form (integer) s + (half-integer).
struct DoublingParams {
  int n;
  int k;
  int m;
  int r;

  DoublingParams(int n_, int k_, int m_) : n(n_), k(k_), m(m_) {
    r = (m % 2 == 0) ? m / 2 : m;
  }
  int c() const { return 2 * n; }
  /// Symplectic-side alpha = rkc + 1.
  int alpha_sp() const { return r * k * c() + 1; }
  /// GL-side alpha = rkn for current rank n'.
  int alpha_gl(int ncur) const { return r * k * ncur; }
  bool m_odd() const { return m % 2 == 1; }
};

namespace ddetail {

/// coefficient of s in an L-argument; non-integer values are a hard error
/// (the composed substitutions must keep S-exponents integral).
inline int s_coef(Rat v) {
  if (!v.is_integer())
    throw std::domain_error("doubling: non-integer S-exponent after substitution");
  return int(v.num);
}

}  // namespace ddetail

/// d_{tau,theta}(s) evaluated at the slot lambda * s:
///   [ L(r a s + 1/2, tau) / L(r a s + rn + 1/2, tau) ]
///   prod_{j<=floor(rn/2)} L(2 r a s + 2j, Sym^2) / L(.. + 2j + 2rn - 2 floor(rn/2) - 1, Sym^2)
///   prod_{j<=ceil(rn/2)}  L(2 r a s + 2j - 1, Ext^2) / L(.. + 2j + 2rn - 2 ceil(rn/2), Ext^2)
/// with a = alpha_sp; the bracket appears only for odd m.
inline LFactorExpression d_tau(Context ctx, const DoublingParams& P, Rat lambda,
                               const TauParams& tau) {
  int rn = P.r * P.n;
  int a1 = ddetail::s_coef(Rat(P.r * P.alpha_sp()) * lambda);
  int a2 = ddetail::s_coef(Rat(2 * P.r * P.alpha_sp()) * lambda);
  LFactorExpression out(ctx);
  if (P.m_odd()) {
    out.mul_num(l_factor(LKind::Std, a1, Rat(1, 2), tau.x));
    out.mul_den(l_factor(LKind::Std, a1, Rat(2 * rn + 1, 2), tau.x));
  }
  int fl = rn / 2, ce = (rn + 1) / 2;
  for (int j = 1; j <= fl; ++j) {
    out.mul_num(l_factor(LKind::Sym2, a2, Rat(2 * j), tau.x));
    out.mul_den(l_factor(LKind::Sym2, a2, Rat(2 * j + 2 * rn - 2 * fl - 1), tau.x));
  }
  for (int j = 1; j <= ce; ++j) {
    out.mul_num(l_factor(LKind::Ext2, a2, Rat(2 * j - 1), tau.x));
    out.mul_den(l_factor(LKind::Ext2, a2, Rat(2 * j + 2 * rn - 2 * ce), tau.x));
  }
  return out;
}

/// The same constant assembled from the raw Gindikin-Karpelevich products of
/// the adjoint action (standard part for odd m, then the exterior-square
/// contributions per character pair), before any telescoping.
inline LFactorExpression d_tau_gk_product(Context ctx, const DoublingParams& P,
                                          Rat lambda, const TauParams& tau) {
  int rn = P.r * P.n;
  int a1 = ddetail::s_coef(Rat(P.r * P.alpha_sp()) * lambda);
  int a2 = ddetail::s_coef(Rat(2 * P.r * P.alpha_sp()) * lambda);
  LFactorExpression out(ctx);
  if (P.m_odd()) {
    for (int i = 0; i < P.k; ++i)
      for (int j = 1; j <= rn; ++j) {
        out.mul_num(l_factor(LKind::Std, a1, Rat(2 * j - 1, 2), {tau.x[i]}));
        out.mul_den(l_factor(LKind::Std, a1, Rat(2 * j + 1, 2), {tau.x[i]}));
      }
  }
  // pairs i < i': prod_{j,j'} L(2as + j + j' - 1, chi_i chi_i') / L(.. + j + j')
  for (int i = 0; i < P.k; ++i)
    for (int ip = i + 1; ip < P.k; ++ip)
      for (int j = 1; j <= rn; ++j)
        for (int jp = 1; jp <= rn; ++jp) {
          FormalScalar e = tau.x[i] * tau.x[ip];
          out.mul_num(l_factor(LKind::Std, a2, Rat(j + jp - 1), {e}));
          out.mul_den(l_factor(LKind::Std, a2, Rat(j + jp), {e}));
        }
  // i = i': prod_{j1 < j2} with chi_i^2
  for (int i = 0; i < P.k; ++i)
    for (int j1 = 1; j1 <= rn; ++j1)
      for (int j2 = j1 + 1; j2 <= rn; ++j2) {
        FormalScalar e = tau.x[i] * tau.x[i];
        out.mul_num(l_factor(LKind::Std, a2, Rat(j1 + j2 - 1), {e}));
        out.mul_den(l_factor(LKind::Std, a2, Rat(j1 + j2), {e}));
      }
  return out;
}

/// d_{tau,tau',theta,a,b}(s) at slot lambda * s, with alpha = rk(a+b):
///   prod_{1<=j<=rb} L(2 r alpha s + j, tau x tau'^vee)
///                 / L(2 r alpha s + ra + j, tau x tau'^vee).
inline LFactorExpression d_ab(Context ctx, const DoublingParams& P, Rat lambda,
                              int a, int b, const TauParams& tau,
                              const TauParams& taup) {
  int alpha = P.alpha_gl(a + b);
  int a2 = ddetail::s_coef(Rat(2 * P.r * alpha) * lambda);
  TauParams taupv = dualize(taup);
  LFactorExpression out(ctx);
  for (int j = 1; j <= P.r * b; ++j) {
    out.mul_num(l_factor(LKind::Rankin, a2, Rat(j), tau.x, taupv.x));
    out.mul_den(l_factor(LKind::Rankin, a2, Rat(P.r * a + j), tau.x, taupv.x));
  }
  return out;
}

/// GL_1 base integral at slot lambda * s (alpha = rk):
///   L(r alpha s + 1/2, pi^vee x tau) L(r alpha s + 1/2, pi x tau'^vee)
///   / prod_{j=1}^{r} L(2 r alpha s + j, tau x tau'^vee).
inline LFactorExpression z_gl1(Context ctx, const DoublingParams& P, Rat lambda,
                               const FormalScalar& mu, const TauParams& tau,
                               const TauParams& taup) {
  int alpha = P.alpha_gl(1);
  int a1 = ddetail::s_coef(Rat(P.r * alpha) * lambda);
  int a2 = ddetail::s_coef(Rat(2 * P.r * alpha) * lambda);
  TauParams taupv = dualize(taup);
  LFactorExpression out(ctx);
  out.mul_num(l_factor(LKind::Rankin, a1, Rat(1, 2), {mu.inverse_monomial()}, tau.x));
  out.mul_num(l_factor(LKind::Rankin, a1, Rat(1, 2), {mu}, taupv.x));
  for (int j = 1; j <= P.r; ++j)
    out.mul_den(l_factor(LKind::Rankin, a2, Rat(j), tau.x, taupv.x));
  return out;
}

/// Closed form of the GL_n x GL_k integral (alpha = rkn):
///   L(r alpha s + 1/2, pi^vee x tau) L(r alpha s + 1/2, pi x tau'^vee)
///   / prod_{j=1}^{rn} L(2 r alpha s + j, tau x tau'^vee).
inline LFactorExpression z_gl_closed(Context ctx, const DoublingParams& P, int n,
                                     Rat lambda, const std::vector<FormalScalar>& mu,
                                     const TauParams& tau, const TauParams& taup) {
  int alpha = P.alpha_gl(n);
  int a1 = ddetail::s_coef(Rat(P.r * alpha) * lambda);
  int a2 = ddetail::s_coef(Rat(2 * P.r * alpha) * lambda);
  TauParams taupv = dualize(taup);
  std::vector<FormalScalar> muinv;
  for (const auto& v : mu) muinv.push_back(v.inverse_monomial());
  LFactorExpression out(ctx);
  out.mul_num(l_factor(LKind::Rankin, a1, Rat(1, 2), muinv, tau.x));
  out.mul_num(l_factor(LKind::Rankin, a1, Rat(1, 2), mu, taupv.x));
  for (int j = 1; j <= P.r * n; ++j)
    out.mul_den(l_factor(LKind::Rankin, a2, Rat(j), tau.x, taupv.x));
  return out;
}

/// Recursive evaluation through the (a,b) = (split, n-split) reduction:
///   Z_n(s) = d_{a,b}(s) Z_a(alpha s/(rka)) Z_b(alpha s/(rkb)).
inline LFactorExpression z_gl_recursive(Context ctx, const DoublingParams& P, int n,
                                        Rat lambda,
                                        const std::vector<FormalScalar>& mu,
                                        const TauParams& tau, const TauParams& taup,
                                        int split = 1) {
  if (int(mu.size()) != n) throw std::invalid_argument("z_gl_recursive: mu size");
  if (n == 1) return z_gl1(ctx, P, lambda, mu[0], tau, taup);
  int a = split, b = n - split;
  if (a < 1 || b < 1) throw std::invalid_argument("z_gl_recursive: bad split");
  // sub-slot: alpha s / (rk a) with alpha = rkn, i.e. lambda * n / a
  Rat la = lambda * Rat(n, a);
  Rat lb = lambda * Rat(n, b);
  std::vector<FormalScalar> mua(mu.begin(), mu.begin() + a);
  std::vector<FormalScalar> mub(mu.begin() + a, mu.end());
  return d_ab(ctx, P, lambda, a, b, tau, taup) *
         z_gl_recursive(ctx, P, a, la, mua, tau, taup) *
         z_gl_recursive(ctx, P, b, lb, mub, tau, taup);
}

/// The main theorem's closed form for Sp_{2n} x GL_k (alpha = rkc + 1):
///   L(r alpha s + 1/2, pi x tau) /
///   ( [L(r alpha s + rn + 1/2, tau)]
///     prod_{j=1}^{rn} L(2 r alpha s + 2j, Ext^2) L(2 r alpha s + 2j-1, Sym^2) ).
inline LFactorExpression z_sp_closed(Context ctx, const DoublingParams& P,
                                     const PiParams& pi, const TauParams& tau,
                                     Rat lambda = Rat(1)) {
  int alpha = P.alpha_sp();
  int a1 = ddetail::s_coef(Rat(P.r * alpha) * lambda);
  int a2 = ddetail::s_coef(Rat(2 * P.r * alpha) * lambda);
  int rn = P.r * P.n;
  LFactorExpression out(ctx);
  out.mul_num(l_factor(LKind::PiTau, a1, Rat(1, 2), satake_pi(ctx, pi), tau.x));
  if (P.m_odd())
    out.mul_den(l_factor(LKind::Std, a1, Rat(2 * rn + 1, 2), tau.x));
  for (int j = 1; j <= rn; ++j) {
    out.mul_den(l_factor(LKind::Ext2, a2, Rat(2 * j), tau.x));
    out.mul_den(l_factor(LKind::Sym2, a2, Rat(2 * j - 1), tau.x));
  }
  return out;
}

/// Composition of the reduction lemmas:
///   Z(s) = d_tau(s) Z_GL(n, alpha s/(rkn)) with tau' = tau*.
inline LFactorExpression z_sp_composed(Context ctx, const DoublingParams& P,
                                       const PiParams& pi, const TauParams& tau,
                                       Rat lambda = Rat(1)) {
  TauParams taustar = dualize(tau);
  Rat sub = lambda * Rat(P.alpha_sp(), P.r * P.k * P.n);
  return d_tau(ctx, P, lambda, tau) *
         z_gl_recursive(ctx, P, P.n, sub, pi.mu, tau, taustar);
}

/// The GL_n x GL_k value through both routes; a recursion/closed-form
/// mismatch is a hard failure.
inline LFactorExpression z_gl(Context ctx, const DoublingParams& P, int n, Rat lambda,
                              const std::vector<FormalScalar>& mu,
                              const TauParams& tau, const TauParams& taup) {
  LFactorExpression rec = z_gl_recursive(ctx, P, n, lambda, mu, tau, taup);
  LFactorExpression closed = z_gl_closed(ctx, P, n, lambda, mu, tau, taup);
  if (!lfactor_eq(rec, closed))
    throw std::logic_error("z_gl: recursion differs from the closed form");
  return closed;
}

/// The Sp_{2n} x GL_k value through both routes; a mismatch with the main
/// theorem's closed form is a hard failure.
inline LFactorExpression z_sp(Context ctx, const DoublingParams& P,
                              const PiParams& pi, const TauParams& tau,
                              Rat lambda = Rat(1)) {
  LFactorExpression composed = z_sp_composed(ctx, P, pi, tau, lambda);
  LFactorExpression closed = z_sp_closed(ctx, P, pi, tau, lambda);
  if (!lfactor_eq(composed, closed))
    throw std::logic_error("z_sp: composition differs from the main theorem");
  return closed;
}

/// Truncated Rankin-Selberg series for n = 1:
///   sum_{l<L} p_l(x) Mu^{-l} (S^r Q^{r-1})^l.
inline FormalScalar rs_series(Context ctx, int k, int r, int L) {
  FormalScalar out = FormalScalar::zero(ctx);
  for (int l = 0; l < L; ++l) {
    FormalScalar term = p_complete(ctx, l, k);
    if (l != 0)
      term *= FormalScalar::variable(ctx, var_mu(1), -l) *
              FormalScalar::variable(ctx, var_s(), r * l) *
              FormalScalar::q_half_pow(ctx, (r - 1) * l);
    out += term;
  }
  return out;
}

/// Taylor expansion to order L (in the block variable S^r Q^{r-1} Mu^{-1}) of
/// the closed form prod_i (1 - x_i Mu^{-1} S^r Q^{r-1})^{-1}.
inline FormalScalar rs_closed_expansion(Context ctx, int k, int r, int L) {
  FormalScalar out = FormalScalar::one(ctx);
  for (int i = 1; i <= k; ++i) {
    FormalScalar block = FormalScalar::variable(ctx, var_x(i)) *
                         FormalScalar::variable(ctx, var_mu(1), -1) *
                         FormalScalar::variable(ctx, var_s(), r) *
                         FormalScalar::q_half_pow(ctx, r - 1);
    FormalScalar geo = FormalScalar::zero(ctx);
    FormalScalar pw = FormalScalar::one(ctx);
    for (int l = 0; l < L; ++l) {
      geo += pw;
      pw *= block;
    }
    out *= geo;
    // truncate: keep S-exponent < rL
    FormalScalar trunc(ctx);
    for (const auto& [key, coef] : out.terms()) {
      int sexp = 0;
      for (auto [code, e] : key.mono)
        if (code == var_s().code()) sexp = e;
      if (sexp < r * L) trunc.add_term(key, coef);
    }
    out = trunc;
  }
  return out;
}

}  // namespace covcs
