#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covcs/cocycle.hpp"
#include "covcs/doubling.hpp"
#include "covcs/gtpatterns.hpp"
#include "covcs/localfield.hpp"
#include "covcs/satake.hpp"
#include "covcs/weyl.hpp"
#include "covcs/whittaker.hpp"

namespace covcs::verify {

struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Config {
  uint64_t seed = 12345;
  long long p = 0;  // 0: smallest p = 1 (mod 2m) per m
  int trunc = 8;
  std::complex<double> theta{1.0, 0.0};
};

inline long long prime_for(const Config& cfg, int m) {
  return cfg.p > 0 ? cfg.p : FieldParams::default_prime(m);
}

namespace detail {

inline void push(std::vector<CaseResult>& out, std::string suite, std::string name,
                 bool pass, std::string detail = "") {
  out.push_back({std::move(suite), std::move(name), pass, std::move(detail)});
}

inline std::string cval(std::complex<double> z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

inline TorusElement random_torus(const FieldParams& F, int d, std::mt19937_64& g) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<long long> unit(1, F.p() - 1);
  TorusElement t(d);
  for (auto& e : t) e = {val(g), unit(g)};
  return t;
}

inline TorusElement mul_torus(const FieldParams& F, const TorusElement& a,
                              const TorusElement& b) {
  TorusElement r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = {a[i].val + b[i].val, FieldParams::mul_mod(a[i].unit, b[i].unit, F.p())};
  return r;
}

inline std::vector<std::complex<double>> random_points(std::mt19937_64& g, int count) {
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> rad(0.5, 1.8);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(rad(g), ang(g)));
  return out;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace detail

/// The (m,k) grid of the theorem suites, rk <= 6.
inline std::vector<std::pair<int, int>> theorem_grid() {
  return {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {6, 1}};
}

// ---------------------------------------------------------------------------
// Hilbert/Gauss ground truth (acceptance criterion 1; part of suite cocycle).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_gauss(const Config& cfg) {
  std::vector<CaseResult> out;
  for (int m : {2, 3, 4, 6}) {
    FieldParams F(prime_for(cfg, m), m);
    double p = double(F.p());
    std::ostringstream tag;
    tag << "m=" << m << ",p=" << F.p();
    bool zero_ok = std::abs(F.gauss_numeric(0) - std::complex<double>{-1.0 / p, 0.0}) <= 1e-12;
    detail::push(out, "cocycle", "gauss-zero-class " + tag.str(), zero_ok,
                 detail::cval(F.gauss_numeric(0)));
    bool mod_ok = true, pair_ok = true;
    for (int l = 1; l < m; ++l) {
      mod_ok &= std::abs(std::abs(F.gauss_numeric(l)) - 1.0 / std::sqrt(p)) <= 1e-9;
      pair_ok &= std::abs(F.gauss_numeric(l) * F.gauss_numeric(-l) -
                          std::complex<double>{1.0 / p, 0.0}) <= 1e-9;
    }
    detail::push(out, "cocycle", "gauss-modulus " + tag.str(), mod_ok);
    detail::push(out, "cocycle", "gauss-pair-product " + tag.str(), pair_ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cocycle property suite (acceptance criterion 2).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_cocycle(const Config& cfg) {
  std::vector<CaseResult> out = suite_gauss(cfg);
  for (int m : {2, 3, 4, 6}) {
    FieldParams F(prime_for(cfg, m), m);
    std::mt19937_64 g(cfg.seed + m);
    std::ostringstream tag;
    tag << "m=" << m << ",p=" << F.p();

    bool coc_ok = true;
    for (int iter = 0; iter < 10000 && coc_ok; ++iter) {
      CoverKind kind = (iter & 1) ? CoverKind::Diamond : CoverKind::BLS;
      int d = 1 + int(g() % 3);
      TorusElement a = detail::random_torus(F, d, g);
      TorusElement b = detail::random_torus(F, d, g);
      TorusElement c = detail::random_torus(F, d, g);
      int lhs = (sigma_torus(kind, F, a, b) +
                 sigma_torus(kind, F, detail::mul_torus(F, a, b), c)) % m;
      int rhs = (sigma_torus(kind, F, a, detail::mul_torus(F, b, c)) +
                 sigma_torus(kind, F, b, c)) % m;
      coc_ok = lhs == rhs;
    }
    detail::push(out, "cocycle", "two-cocycle-identity " + tag.str(), coc_ok);

    bool blk_ok = true;
    for (int iter = 0; iter < 2000 && blk_ok; ++iter) {
      int l = 1 + int(g() % 2), rest = 1 + int(g() % 2);
      TorusElement a = detail::random_torus(F, l, g), ap = detail::random_torus(F, l, g);
      TorusElement b = detail::random_torus(F, rest, g), bp = detail::random_torus(F, rest, g);
      TorusElement f1 = a, f2 = ap;
      f1.insert(f1.end(), b.begin(), b.end());
      f2.insert(f2.end(), bp.begin(), bp.end());
      blk_ok &= sigma_torus(CoverKind::BLS, F, f1, f2) ==
                mod_m(det_symbol(F, a, bp) + sigma_torus(CoverKind::BLS, F, a, ap) +
                          sigma_torus(CoverKind::BLS, F, b, bp),
                      m);
      blk_ok &= sigma_torus(CoverKind::Diamond, F, f1, f2) ==
                mod_m(sigma_torus(CoverKind::Diamond, F, a, ap) +
                          sigma_torus(CoverKind::Diamond, F, b, bp),
                      m);
    }
    detail::push(out, "cocycle", "block-compatibility " + tag.str(), blk_ok);

    bool kub_ok = true;
    for (int iter = 0; iter < 1000 && kub_ok; ++iter) {
      TorusElement t = detail::random_torus(F, 2, g), tp = detail::random_torus(F, 2, g);
      auto lift = [&](const TorusEntry& e) {
        long long pw = 1;
        for (int i = 0; i < std::abs(e.val); ++i) pw *= F.p();
        return e.val >= 0 ? PadicRational(e.unit * pw) : PadicRational(e.unit, pw);
      };
      Mat2 a{}, b{};
      a[0][0] = lift(t[0]); a[1][1] = lift(t[1]);
      b[0][0] = lift(tp[0]); b[1][1] = lift(tp[1]);
      kub_ok = kubota_sigma2(F, a, b) == sigma_torus(CoverKind::BLS, F, t, tp);
    }
    detail::push(out, "cocycle", "kubota-diagonal " + tag.str(), kub_ok);

    bool weyl_ok = true;
    for (int iter = 0; iter < 1000 && weyl_ok; ++iter) {
      int n = 1 + int(g() % 3);
      TorusElement a = detail::random_torus(F, n, g);
      TorusElement t = a;
      for (int i = n - 1; i >= 0; --i)
        t.push_back({-a[i].val, FieldParams::inv_mod(a[i].unit, F.p())});
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), g);
      Perm w(2 * n);
      for (int i = 0; i < n; ++i) {
        bool flip = g() & 1;
        int j = img[i];
        w.img[i] = flip ? 2 * n - 1 - j : j;
        w.img[2 * n - 1 - i] = flip ? j : 2 * n - 1 - j;
      }
      weyl_ok = conj_torus_by_weyl(F, w, t).second == 0;
    }
    detail::push(out, "cocycle", "weyl-trivial-on-sp-torus " + tag.str(), weyl_ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CS value at the identity (acceptance criterion 3).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_cs_identity(const Config& cfg) {
  std::vector<CaseResult> out;
  for (auto [m, k] : theorem_grid()) {
    int r = m % 2 == 0 ? m / 2 : m;
    int d = r * k;
    std::ostringstream tag;
    tag << "(m,k)=(" << m << "," << k << ")";
    Context ctx{m, true};
    PSParams<FormalBackend> P(FormalBackend{ctx}, d, m, theta_spec(ctx, k, r));
    RationalExpr w = w_weyl(P, ExpVec(d, 0), ExpVec(d, 0));
    FormalScalar expect = FormalScalar::one(ctx);
    for (int j = 1; j <= r; ++j) expect *= c_poly(ctx, j, k);
    bool formal_ok = frac_eq(w, RationalExpr(expect));
    detail::push(out, "cs-identity", "formal " + tag.str(), formal_ok,
                 formal_ok ? "" : "W(0,0) != prod_j C(j,x)");

    FieldParams F(prime_for(cfg, m), m);
    std::mt19937_64 g(cfg.seed + 10 * m + k);
    bool num_ok = true;
    for (int pt = 0; pt < 5 && num_ok; ++pt) {
      auto x = detail::random_points(g, k);
      PSParams<NumericBackend> Pn(NumericBackend{&F, cfg.theta}, d, m,
                                  theta_spec_numeric(F, k, x));
      std::complex<double> lhs = w_weyl(Pn, ExpVec(d, 0), ExpVec(d, 0));
      std::complex<double> rhs{1.0, 0.0};
      for (int j = 1; j <= r; ++j)
        for (int i = 0; i < k; ++i)
          for (int jj = i + 1; jj < k; ++jj)
            rhs *= 1.0 - covcs::detail::cpow_int({std::sqrt(double(F.p())), 0.0}, -2 * j) *
                             x[i] / x[jj];
      num_ok = detail::close(lhs, rhs, 1e-8);
      if (!num_ok) {
        detail::push(out, "cs-identity", "numeric " + tag.str(), false,
                     "lhs=" + detail::cval(lhs) + " rhs=" + detail::cval(rhs));
      }
    }
    if (num_ok) detail::push(out, "cs-identity", "numeric " + tag.str(), true);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalized Whittaker value at t_{(rl, 0')} (acceptance criterion 4).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_whittaker_pl(const Config& cfg) {
  std::vector<CaseResult> out;
  for (auto [m, k] : theorem_grid()) {
    int r = m % 2 == 0 ? m / 2 : m;
    int d = r * k;
    std::ostringstream tag;
    tag << "(m,k)=(" << m << "," << k << ")";
    {
      // exact in the formal backend
      Context ctx{m, true};
      PSParams<FormalBackend> P(FormalBackend{ctx}, d, m, theta_spec(ctx, k, r));
      RationalExpr w0 = w_weyl(P, ExpVec(d, 0), ExpVec(d, 0));
      bool ok = true;
      for (int l = 0; l <= 2 && ok; ++l) {
        ExpVec b(d, 0);
        b[0] = r * l;
        RationalExpr wl = w_weyl(P, ExpVec(d, 0), b);
        FormalScalar expect =
            FormalScalar::q_half_pow(ctx, -l * r * (r * k - 1) + l * (r - 1)) *
            FormalScalar::variable(ctx, var_theta(), l) * p_complete(ctx, l, k);
        ok = frac_eq(wl, RationalExpr(expect) * w0);
      }
      detail::push(out, "whittaker-pl", "formal " + tag.str(), ok);
    }
    if (d > 4) {
      // corroborate the large ranks numerically as well
      FieldParams F(prime_for(cfg, m), m);
      std::mt19937_64 g(cfg.seed + 100 * m + k);
      bool ok = true;
      for (int pt = 0; pt < 3 && ok; ++pt) {
        auto x = detail::random_points(g, k);
        PSParams<NumericBackend> Pn(NumericBackend{&F, cfg.theta}, d, m,
                                    theta_spec_numeric(F, k, x));
        std::complex<double> w0 = w_weyl(Pn, ExpVec(d, 0), ExpVec(d, 0));
        for (int l = 0; l <= 2 && ok; ++l) {
          ExpVec b(d, 0);
          b[0] = r * l;
          std::complex<double> wl = w_weyl(Pn, ExpVec(d, 0), b);
          std::complex<double> pl{0.0, 0.0};
          // complete homogeneous symmetric polynomial at the sample
          std::function<void(int, int, std::complex<double>)> rec =
              [&](int pos, int rem, std::complex<double> acc) {
                if (pos == k - 1) {
                  pl += acc * covcs::detail::cpow_int(x[pos], rem);
                  return;
                }
                for (int v = 0; v <= rem; ++v)
                  rec(pos + 1, rem - v, acc * covcs::detail::cpow_int(x[pos], v));
              };
          rec(0, l, {1.0, 0.0});
          std::complex<double> expect =
              covcs::detail::cpow_int({std::sqrt(double(F.p())), 0.0},
                               -l * r * (r * k - 1) + l * (r - 1)) *
              covcs::detail::cpow_int(cfg.theta, l) * pl * w0;
          ok = detail::close(wl, expect, 1e-8);
        }
      }
      detail::push(out, "whittaker-pl", "numeric " + tag.str(), ok);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weyl sum vs iterative formula (acceptance criterion 5) and GK word
// independence checks.
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_iterative(const Config& cfg) {
  std::vector<CaseResult> out;
  for (auto [m, k] : theorem_grid()) {
    int r = m % 2 == 0 ? m / 2 : m;
    int d = r * k;
    if (d > 4 || d < 2) continue;
    std::ostringstream tag;
    tag << "(m,k)=(" << m << "," << k << ")";
    FieldParams F(prime_for(cfg, m), m);
    std::mt19937_64 g(cfg.seed + 1000 * m + k);
    std::uniform_int_distribution<int> gap(0, 2);
    bool ok = true;
    for (int iter = 0; iter < 20 && ok; ++iter) {
      auto x = detail::random_points(g, k);
      PSParams<NumericBackend> P(NumericBackend{&F, cfg.theta}, d, m,
                                 theta_spec_numeric(F, k, x));
      ExpVec b(d);
      int cur = gap(g);
      for (int i = d - 1; i >= 0; --i) {
        b[i] = cur;
        cur += gap(g);
      }
      std::complex<double> direct = w_weyl(P, ExpVec(d, 0), b);
      std::complex<double> iter_v = w_iterative(P, ExpVec(d, 0), b);
      ok = detail::close(direct, iter_v, 1e-8);
      if (!ok) {
        std::ostringstream det;
        det << "b=(";
        for (int v : b) det << v << ",";
        det << ") direct=" << detail::cval(direct) << " iterative=" << detail::cval(iter_v);
        detail::push(out, "cs-identity", "weyl-vs-iterative " + tag.str(), false, det.str());
      }
    }
    if (ok) detail::push(out, "cs-identity", "weyl-vs-iterative " + tag.str(), true);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GT suite (acceptance criterion 6).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_gt_top(const Config&) {
  std::vector<CaseResult> out;
  for (auto [r, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {3, 2}}) {
    int d = r * k;
    std::ostringstream tag;
    tag << "(r,k)=(" << r << "," << k << ")";
    std::vector<int> top(d);
    for (int j = 0; j < d; ++j) top[j] = d - 1 - j;
    Context ctx{2 * r, true};  // any m with this r works for the coefficient
    GTPattern best = top_pattern(r, k);
    int target = r * k * (k * k - 1) / 6;
    int count_max = 0;
    bool bounded = true, unique_match = true;
    enumerate_patterns(top, r, [&](const GTPattern& p) {
      int deg = pattern_degree(p, r, k);
      if (deg > target) bounded = false;
      if (deg == target) {
        ++count_max;
        if (!(p.rows == best.rows)) unique_match = false;
      }
    });
    bool coeff_ok =
        pattern_coeff_G(ctx, best) * pattern_monomial(ctx, best, r, k) ==
        desired_monomial(ctx, r, k);
    detail::push(out, "gt-top", "degree-bound " + tag.str(), bounded);
    detail::push(out, "gt-top", "unique-maximum " + tag.str(),
                 count_max == 1 && unique_match);
    detail::push(out, "gt-top", "closed-coefficient " + tag.str(), coeff_ok);
  }
  // bit-exact reference arrays
  Context ctx4{4, true};
  GTPattern p22 = top_pattern(2, 2);
  detail::push(out, "gt-top", "example-(2,2)-pattern",
               p22.rows == std::vector<std::vector<int>>{{3, 2, 1, 0}, {3, 2, 0}, {3, 2}, {2}});
  detail::push(out, "gt-top", "example-(2,2)-coefficient",
               pattern_coeff_G(ctx4, p22) == FormalScalar::q_pow(ctx4, -3));
  Context ctx3{3, true};
  GTPattern p33 = top_pattern(3, 3);
  FormalScalar full33 = pattern_coeff_G(ctx3, p33) * pattern_monomial(ctx3, p33, 3, 3);
  FormalScalar expect33 = FormalScalar::q_pow(ctx3, -18).scaled(Rat(-1)) *
                          FormalScalar::variable(ctx3, var_x(1), 6) *
                          FormalScalar::variable(ctx3, var_x(3), -6);
  detail::push(out, "gt-top", "example-(3,3)-monomial", full33 == expect33);
  return out;
}

// ---------------------------------------------------------------------------
// GK/constant algebra (acceptance criterion 7).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_gk(const Config&) {
  std::vector<CaseResult> out;
  for (int m : {1, 2, 3, 4}) {
    for (int n = 1; n <= 2; ++n) {
      for (int k = 1; k <= 3; ++k) {
        DoublingParams P(n, k, m);
        if (P.r * n > 4) continue;
        Context ctx{m, true};
        TauParams tau = TauParams::standard(ctx, k);
        std::ostringstream tag;
        tag << "(n,k,m)=(" << n << "," << k << "," << m << ")";
        detail::push(out, "gk", "d-tau-vs-gk-product " + tag.str(),
                     lfactor_eq(d_tau(ctx, P, Rat(1), tau),
                                d_tau_gk_product(ctx, P, Rat(1), tau)));
      }
    }
  }
  for (int k = 1; k <= 3; ++k) {
    Context ctx{2, true};
    TauParams tau = TauParams::standard(ctx, k);
    LFactorExpression lhs(ctx), rhs(ctx);
    lhs.mul_num(l_factor(LKind::Sym2, 1, Rat(0), tau.x));
    lhs.mul_num(l_factor(LKind::Ext2, 1, Rat(0), tau.x));
    rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), tau.x, tau.x));
    detail::push(out, "gk", "sym2-ext2-vs-rankin k=" + std::to_string(k),
                 lfactor_eq(lhs, rhs));
  }
  for (bool rm : {true, false}) {
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        Context ctx{2, true};
        PiParams pi = PiParams::standard(ctx, n, rm);
        TauParams tau = TauParams::standard(ctx, k);
        LFactorExpression lhs(ctx), rhs(ctx);
        lhs.mul_num(l_factor(LKind::PiTau, 1, Rat(0), satake_pi(ctx, pi), tau.x));
        std::vector<FormalScalar> muinv;
        for (const auto& v : pi.mu) muinv.push_back(v.inverse_monomial());
        rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), pi.mu, tau.x));
        if (rm) rhs.mul_num(l_factor(LKind::Std, 1, Rat(0), tau.x));
        rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), muinv, tau.x));
        std::ostringstream tag;
        tag << "n=" << n << ",k=" << k << "," << (rm ? "r=m" : "r=m/2");
        detail::push(out, "gk", "standard-L-pi-tau " + tag.str(), lfactor_eq(lhs, rhs));
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rankin-Selberg series (acceptance criterion 8).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_rs_series(const Config& cfg) {
  std::vector<CaseResult> out;
  for (int m : {2, 3, 4}) {
    int r = m % 2 == 0 ? m / 2 : m;
    for (int k = 1; k <= 3; ++k) {
      Context ctx{m, true};
      std::ostringstream tag;
      tag << "m=" << m << ",k=" << k << ",L=" << cfg.trunc;
      detail::push(out, "rs-series", "series-vs-closed " + tag.str(),
                   rs_series(ctx, k, r, cfg.trunc) ==
                       rs_closed_expansion(ctx, k, r, cfg.trunc));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Doubling identities (acceptance criterion 9).
// ---------------------------------------------------------------------------
inline std::vector<CaseResult> suite_doubling(const Config&) {
  std::vector<CaseResult> out;
  std::vector<std::array<int, 3>> grid = {{1, 1, 1}, {1, 2, 1}, {2, 1, 1},
                                          {1, 1, 2}, {1, 2, 2}, {1, 1, 3},
                                          {1, 2, 3}, {1, 1, 4}, {1, 1, 6}};
  for (auto [n, k, m] : grid) {
    Context ctx{m, true};
    DoublingParams P(n, k, m);
    TauParams tau = TauParams::standard(ctx, k);
    PiParams pi = PiParams::standard(ctx, n, P.m_odd());
    std::ostringstream tag;
    tag << "(n,k,m)=(" << n << "," << k << "," << m << ")";
    LFactorExpression composed = z_sp_composed(ctx, P, pi, tau);
    LFactorExpression closed = z_sp_closed(ctx, P, pi, tau);
    bool ok = lfactor_eq(composed, closed);
    detail::push(out, "doubling", "sp-main-theorem " + tag.str(), ok,
                 ok ? "" : "lhs=" + composed.to_json_line() + " rhs=" + closed.to_json_line());
  }
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 2; ++k)
      for (int n = 1; n <= 3; ++n) {
        Context ctx{m, true};
        DoublingParams P(n, k, m);
        TauParams tau = TauParams::standard(ctx, k);
        TauParams taup = TauParams::standard_xp(ctx, k);
        PiParams pi = PiParams::standard(ctx, n, P.m_odd());
        std::ostringstream tag;
        tag << "(n,k,m)=(" << n << "," << k << "," << m << ")";
        bool ok = lfactor_eq(z_gl_recursive(ctx, P, n, Rat(1), pi.mu, tau, taup),
                             z_gl_closed(ctx, P, n, Rat(1), pi.mu, tau, taup));
        detail::push(out, "doubling", "gl-recursion " + tag.str(), ok);
      }
  return out;
}

inline std::vector<CaseResult> run_suite(const std::string& name, const Config& cfg) {
  if (name == "cocycle") return suite_cocycle(cfg);
  if (name == "cs-identity") {
    auto out = suite_cs_identity(cfg);
    auto it = suite_iterative(cfg);
    out.insert(out.end(), it.begin(), it.end());
    return out;
  }
  if (name == "whittaker-pl") return suite_whittaker_pl(cfg);
  if (name == "gt-top") return suite_gt_top(cfg);
  if (name == "gk") return suite_gk(cfg);
  if (name == "rs-series") return suite_rs_series(cfg);
  if (name == "doubling") return suite_doubling(cfg);
  if (name == "all") {
    std::vector<CaseResult> out;
    for (const char* s : {"cocycle", "cs-identity", "whittaker-pl", "gt-top", "gk",
                          "rs-series", "doubling"}) {
      auto r = run_suite(s, cfg);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace covcs::verify
