#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "covcs/rational.hpp"
#include "covcs/scalar.hpp"

namespace covcs {

/// Satake data of an unramified representation of GL_k^{(m,r)}:
/// x_i = chi_i(pi^r) as unit monomials of the value domain.
struct TauParams {
  int k;
  std::vector<FormalScalar> x;

  TauParams(int k_, std::vector<FormalScalar> x_) : k(k_), x(std::move(x_)) {
    if (k < 1 || int(x.size()) != k) throw std::invalid_argument("TauParams");
  }

  static TauParams standard(Context ctx, int k) {
    std::vector<FormalScalar> x;
    for (int i = 1; i <= k; ++i) x.push_back(FormalScalar::variable(ctx, var_x(i)));
    return TauParams(k, std::move(x));
  }
  static TauParams standard_xp(Context ctx, int k) {
    std::vector<FormalScalar> x;
    for (int i = 1; i <= k; ++i) x.push_back(FormalScalar::variable(ctx, var_xp(i)));
    return TauParams(k, std::move(x));
  }
};

/// Satake data of pi on the n-fold cover side: mu_i = mu_i(pi^r), with the
/// central entry 1 present exactly when r = m (odd m).
struct PiParams {
  int n;
  std::vector<FormalScalar> mu;
  bool r_equals_m;

  PiParams(int n_, std::vector<FormalScalar> mu_, bool rm)
      : n(n_), mu(std::move(mu_)), r_equals_m(rm) {
    if (n < 1 || int(mu.size()) != n) throw std::invalid_argument("PiParams");
  }

  static PiParams standard(Context ctx, int n, bool r_equals_m) {
    std::vector<FormalScalar> mu;
    for (int i = 1; i <= n; ++i) mu.push_back(FormalScalar::variable(ctx, var_mu(i)));
    return PiParams(n, std::move(mu), r_equals_m);
  }
};

/// diag(mu_1, ..., mu_n, [1], mu_n^{-1}, ..., mu_1^{-1}).
inline std::vector<FormalScalar> satake_pi(Context ctx, const PiParams& pi) {
  std::vector<FormalScalar> t = pi.mu;
  if (pi.r_equals_m) t.push_back(FormalScalar::one(ctx));
  for (int i = pi.n - 1; i >= 0; --i) t.push_back(pi.mu[i].inverse_monomial());
  return t;
}

/// tau* : x -> reversed inverses; t_{tau^vee, theta^{-1}} = t_{tau*, theta}.
inline TauParams dualize(const TauParams& tau) {
  std::vector<FormalScalar> x;
  for (int i = tau.k - 1; i >= 0; --i) x.push_back(tau.x[i].inverse_monomial());
  return TauParams(tau.k, std::move(x));
}

enum class LKind { Std, Rankin, Sym2, Ext2, PiTau };

inline const char* lkind_name(LKind k) {
  switch (k) {
    case LKind::Std: return "std";
    case LKind::Rankin: return "rankin";
    case LKind::Sym2: return "sym2";
    case LKind::Ext2: return "ext2";
    case LKind::PiTau: return "pixtau";
  }
  return "?";
}

/// One Euler factor L(a s + b, kind, operands), stored with the expanded
/// eigenvalue list of the finite-dimensional representation.
struct LAtom {
  LKind kind;
  int s_coef;     // a
  int twice_b;    // 2b, so that q^{-(a s + b)} = S^a Q^{-2b}
  std::vector<FormalScalar> eigs;
};

/// L(a s + b, kind): expanded as prod (1 - eig S^a Q^{-2b})^{-1}.
inline LAtom l_factor(LKind kind, int a, Rat b,
                      const std::vector<FormalScalar>& op1,
                      const std::vector<FormalScalar>& op2 = {}) {
  Rat tb = b * Rat(2);
  if (!tb.is_integer()) throw std::invalid_argument("l_factor: shift not half-integral");
  LAtom atom{kind, a, int(tb.num), {}};
  switch (kind) {
    case LKind::Std:
      atom.eigs = op1;
      break;
    case LKind::Rankin:
    case LKind::PiTau:
      for (const auto& u : op1)
        for (const auto& v : op2) atom.eigs.push_back(u * v);
      break;
    case LKind::Sym2:
      for (size_t i = 0; i < op1.size(); ++i)
        for (size_t j = i; j < op1.size(); ++j) atom.eigs.push_back(op1[i] * op1[j]);
      break;
    case LKind::Ext2:
      for (size_t i = 0; i < op1.size(); ++i)
        for (size_t j = i + 1; j < op1.size(); ++j) atom.eigs.push_back(op1[i] * op1[j]);
      break;
  }
  return atom;
}

/// Formal product/quotient of L-factor atoms; comparison expands the linear
/// factors, cancels exact matches, and decides the residue by frac_eq.
class LFactorExpression {
 public:
  explicit LFactorExpression(Context ctx) : ctx_(ctx) {}

  static LFactorExpression one(Context ctx) { return LFactorExpression(ctx); }

  Context ctx() const { return ctx_; }
  const std::vector<LAtom>& num_atoms() const { return num_; }
  const std::vector<LAtom>& den_atoms() const { return den_; }

  LFactorExpression& mul_num(LAtom a) { num_.push_back(std::move(a)); return *this; }
  LFactorExpression& mul_den(LAtom a) { den_.push_back(std::move(a)); return *this; }

  friend LFactorExpression operator*(const LFactorExpression& a,
                                     const LFactorExpression& b) {
    LFactorExpression r = a;
    r.num_.insert(r.num_.end(), b.num_.begin(), b.num_.end());
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    return r;
  }

  /// The linear polynomial 1 - eig S^a Q^{-2b} of one eigenvalue.
  static FormalScalar linear_factor(Context ctx, const FormalScalar& eig, int a,
                                    int twice_b) {
    return FormalScalar::one(ctx) -
           eig * FormalScalar::variable(ctx, var_s(), a) *
               FormalScalar::q_half_pow(ctx, -twice_b);
  }

  /// Full expansion to a RationalExpr (L-factors are inverses of products of
  /// linear factors).
  RationalExpr expand() const {
    FormalScalar num = FormalScalar::one(ctx_), den = FormalScalar::one(ctx_);
    for (const auto& atom : den_)
      for (const auto& e : atom.eigs) num *= linear_factor(ctx_, e, atom.s_coef, atom.twice_b);
    for (const auto& atom : num_)
      for (const auto& e : atom.eigs) den *= linear_factor(ctx_, e, atom.s_coef, atom.twice_b);
    return RationalExpr(num, den);
  }

  /// Signed multiset of linear factors: key -> (factor, multiplicity),
  /// positive multiplicities in the denominator of the expansion.
  std::map<std::string, std::pair<FormalScalar, int>> factor_multiset() const {
    std::map<std::string, std::pair<FormalScalar, int>> out;
    auto add = [&](const LAtom& atom, int sign) {
      for (const auto& e : atom.eigs) {
        FormalScalar f = linear_factor(ctx_, e, atom.s_coef, atom.twice_b);
        std::string key = f.str();
        auto it = out.find(key);
        if (it == out.end()) out.emplace(key, std::make_pair(f, sign));
        else it->second.second += sign;
      }
    };
    for (const auto& atom : num_) add(atom, 1);
    for (const auto& atom : den_) add(atom, -1);
    std::erase_if(out, [](const auto& kv) { return kv.second.second == 0; });
    return out;
  }

  std::string to_json_line() const;

 private:
  Context ctx_;
  std::vector<LAtom> num_;
  std::vector<LAtom> den_;
};

/// Exact equality as rational functions: cancel identical linear factors,
/// then decide the residue by cross-multiplication.
inline bool lfactor_eq(const LFactorExpression& a, const LFactorExpression& b) {
  Context ctx = a.ctx();
  auto fa = a.factor_multiset();
  auto fb = b.factor_multiset();
  FormalScalar na = FormalScalar::one(ctx), da = FormalScalar::one(ctx);
  FormalScalar nb = FormalScalar::one(ctx), db = FormalScalar::one(ctx);
  for (auto& [key, fm] : fa) {
    auto it = fb.find(key);
    int mb = it == fb.end() ? 0 : it->second.second;
    int residue = fm.second - mb;
    // residue multiplicity on the a-side (denominator when positive)
    for (int c = 0; c < residue; ++c) da *= fm.first;
    for (int c = 0; c < -residue; ++c) na *= fm.first;
    if (it != fb.end()) it->second.second = 0;
  }
  for (auto& [key, fm] : fb) {
    for (int c = 0; c < fm.second; ++c) db *= fm.first;
    for (int c = 0; c < -fm.second; ++c) nb *= fm.first;
  }
  return frac_eq(RationalExpr(na, da), RationalExpr(nb, db));
}

inline std::string LFactorExpression::to_json_line() const {
  auto atom_json = [](const LAtom& a) {
    std::ostringstream os;
    os << "{\"kind\":\"" << lkind_name(a.kind) << "\",\"s_coef\":" << a.s_coef
       << ",\"shift\":" << Rat(a.twice_b, 2).str() << ",\"eigs\":[";
    for (size_t i = 0; i < a.eigs.size(); ++i) {
      if (i) os << ",";
      os << "\"" << a.eigs[i].str() << "\"";
    }
    os << "]}";
    return os.str();
  };
  std::ostringstream os;
  os << "{\"num\":[";
  for (size_t i = 0; i < num_.size(); ++i) {
    if (i) os << ",";
    os << atom_json(num_[i]);
  }
  os << "],\"den\":[";
  for (size_t i = 0; i < den_.size(); ++i) {
    if (i) os << ",";
    os << atom_json(den_[i]);
  }
  os << "]}";
  return os.str();
}

}  // namespace covcs
