#pragma once

#include <array>
#include <stdexcept>
#include <utility>

#include "covcs/localfield.hpp"
#include "covcs/weyl.hpp"

namespace covcs {

/// Which explicit 2-cocycle to evaluate: the block-compatible cocycle of
/// GL_d (BLS) or the cocycle of GL_d^{(m,r)} obtained by restriction from
/// the symplectic cover (Diamond).
enum class CoverKind { BLS, Diamond };

inline int mod_m(long long x, int m) {
  long long r = x % m;
  if (r < 0) r += m;
  return int(r);
}

inline TorusEntry negate_entry(const FieldParams& F, const TorusEntry& t) {
  long long u = (F.p() - (t.unit % F.p())) % F.p();
  return TorusEntry{t.val, u};
}

/// sigma on torus pairs, as a mu_m exponent.
/// BLS:      sigma_d(t, t') = prod_{i<j} (t_i, t'_j)_m
/// Diamond:  sigma_d^{<>}(t, t') = prod_i (t_i, t'_i)_m^{-1}
inline int sigma_torus(CoverKind kind, const FieldParams& F,
                       const TorusElement& t, const TorusElement& tp) {
  if (t.size() != tp.size())
    throw std::invalid_argument("sigma_torus: rank mismatch");
  long long e = 0;
  if (kind == CoverKind::BLS) {
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = i + 1; j < t.size(); ++j) e += F.hilbert(t[i], tp[j]);
  } else {
    for (size_t i = 0; i < t.size(); ++i) e -= F.hilbert(t[i], tp[i]);
  }
  return mod_m(e, F.m());
}

using Mat2 = std::array<std::array<PadicRational, 2>, 2>;

inline PadicRational det2(const Mat2& g) {
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

inline Mat2 mul2(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

/// Kubota's 2-cocycle on GL_2:
/// sigma_2(g,g') = (gamma(gg')/gamma(g), gamma(gg')/(gamma(g') det g))_m
/// with gamma = lower-left entry when nonzero, else lower-right.
inline int kubota_sigma2(const FieldParams& F, const Mat2& g, const Mat2& gp) {
  auto gamma = [](const Mat2& h) -> PadicRational {
    return h[1][0].is_zero() ? h[1][1] : h[1][0];
  };
  PadicRational dg = det2(g);
  if (dg.is_zero() || det2(gp).is_zero())
    throw std::invalid_argument("kubota_sigma2: singular input");
  Mat2 prod = mul2(g, gp);
  PadicRational a = gamma(prod) / gamma(g);
  PadicRational b = gamma(prod) / (gamma(gp) * dg);
  return mod_m(F.hilbert(a.to_entry(F.p()), b.to_entry(F.p())), F.m());
}

/// sigma_d(w', t) = prod_{(i,j) = alpha in Phi^+ : w alpha < 0} (-t_j, t_i)_m
/// for w' in the set of fixed reduced-word representatives.
inline int sigma_weyl_torus(const FieldParams& F, const Perm& w,
                            const TorusElement& t) {
  if (size_t(w.d()) != t.size())
    throw std::invalid_argument("sigma_weyl_torus: rank mismatch");
  long long e = 0;
  for (auto [i, j] : inversions(w))
    e += F.hilbert(negate_entry(F, t[j]), t[i]);
  return mod_m(e, F.m());
}

/// sigma_d(t, w') = 1 identically.
inline int sigma_torus_weyl(const FieldParams&, const Perm&, const TorusElement&) {
  return 0;
}

/// Conjugation of <t,1> by a representative w': returns (^{w'} t, exponent),
/// the exponent being prod over inverted positive roots of (-t_j, t_i)_m.
inline std::pair<TorusElement, int> conj_torus_by_weyl(const FieldParams& F,
                                                       const Perm& w,
                                                       const TorusElement& t) {
  return {act_params(w, t), sigma_weyl_torus(F, w, t)};
}

/// Block-compatibility of the BLS cocycle on diagonal data:
/// sigma_d(diag(a,b), diag(a',b')) =
///   (det a, det b')_m sigma_l(a,a') sigma_{d-l}(b,b').
/// Exposed for tests: the determinant-symbol correction term.
inline int det_symbol(const FieldParams& F, const TorusElement& a,
                      const TorusElement& bp) {
  TorusEntry da{0, 1}, db{0, 1};
  for (const auto& e : a) {
    da.val += e.val;
    da.unit = FieldParams::mul_mod(da.unit, e.unit, F.p());
  }
  for (const auto& e : bp) {
    db.val += e.val;
    db.unit = FieldParams::mul_mod(db.unit, e.unit, F.p());
  }
  return mod_m(F.hilbert(da, db), F.m());
}

}  // namespace covcs
