#include <catch2/catch_amalgamated.hpp>

#include "covcs/satake.hpp"
#include "test_util.hpp"

using namespace covcs;

TEST_CASE("satake_pi") {
  Context ctx{3, true};
  PiParams pi = PiParams::standard(ctx, 1, true);
  auto t = satake_pi(ctx, pi);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == FormalScalar::variable(ctx, var_mu(1)));
  CHECK(t[1] == FormalScalar::one(ctx));
  CHECK(t[2] == FormalScalar::variable(ctx, var_mu(1), -1));
  PiParams pi2 = PiParams::standard(ctx, 2, false);
  auto t2 = satake_pi(ctx, pi2);
  REQUIRE(t2.size() == 4);
  CHECK(t2[1] == FormalScalar::variable(ctx, var_mu(2)));
  CHECK(t2[2] == FormalScalar::variable(ctx, var_mu(2), -1));
  // all-ones data
  PiParams triv(2, {FormalScalar::one(ctx), FormalScalar::one(ctx)}, true);
  auto t3 = satake_pi(ctx, triv);
  CHECK(t3.size() == 5);
  for (const auto& v : t3) CHECK(v == FormalScalar::one(ctx));
}

TEST_CASE("dualize") {
  Context ctx{2, true};
  TauParams tau = TauParams::standard(ctx, 1);
  auto d = dualize(tau);
  CHECK(d.x[0] == FormalScalar::variable(ctx, var_x(1), -1));
  TauParams tau3 = TauParams::standard(ctx, 3);
  auto dd = dualize(dualize(tau3));
  for (int i = 0; i < 3; ++i) CHECK(dd.x[i] == tau3.x[i]);
  // rankin(tau, dualize(tau*)) = rankin(tau, tau)
  LFactorExpression lhs(ctx), rhs(ctx);
  lhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), tau3.x, dualize(dualize(tau3)).x));
  rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), tau3.x, tau3.x));
  CHECK(lfactor_eq(lhs, rhs));
  CHECK(frac_eq(lhs.expand(), rhs.expand()));
}

TEST_CASE("l_factor shapes") {
  Context ctx{2, true};
  TauParams tau = TauParams::standard(ctx, 1);
  LAtom a = l_factor(LKind::Std, 2, Rat(1, 2), tau.x);
  REQUIRE(a.eigs.size() == 1);
  LFactorExpression e(ctx);
  e.mul_num(a);
  // (1 - x1 S^2 Q^{-1})^{-1}
  FormalScalar lin = FormalScalar::one(ctx) -
                     FormalScalar::variable(ctx, var_x(1)) *
                         FormalScalar::variable(ctx, var_s(), 2) *
                         FormalScalar::q_half_pow(ctx, -1);
  CHECK(frac_eq(e.expand(), RationalExpr(FormalScalar::one(ctx), lin)));
  CHECK_THROWS_AS(l_factor(LKind::Std, 1, Rat(1, 3), tau.x), std::invalid_argument);
}

TEST_CASE("sym2 times ext2 equals rankin(tau, tau)") {
  for (int k = 1; k <= 4; ++k) {
    Context ctx{3, true};
    TauParams tau = TauParams::standard(ctx, k);
    LFactorExpression lhs(ctx), rhs(ctx);
    lhs.mul_num(l_factor(LKind::Sym2, 1, Rat(0), tau.x));
    lhs.mul_num(l_factor(LKind::Ext2, 1, Rat(0), tau.x));
    rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), tau.x, tau.x));
    CHECK(lfactor_eq(lhs, rhs));
    if (k <= 2) CHECK(frac_eq(lhs.expand(), rhs.expand()));
  }
}

TEST_CASE("standard L of pi x tau factors through the GL pieces") {
  for (bool r_eq_m : {true, false}) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 3; ++k) {
        Context ctx{2, true};
        PiParams pi = PiParams::standard(ctx, n, r_eq_m);
        TauParams tau = TauParams::standard(ctx, k);
        LFactorExpression lhs(ctx);
        lhs.mul_num(l_factor(LKind::PiTau, 1, Rat(0), satake_pi(ctx, pi), tau.x));
        LFactorExpression rhs(ctx);
        std::vector<FormalScalar> muinv;
        for (const auto& v : pi.mu) muinv.push_back(v.inverse_monomial());
        rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), pi.mu, tau.x));
        if (r_eq_m) rhs.mul_num(l_factor(LKind::Std, 1, Rat(0), tau.x));
        rhs.mul_num(l_factor(LKind::Rankin, 1, Rat(0), muinv, tau.x));
        CHECK(lfactor_eq(lhs, rhs));
      }
    }
  }
}

TEST_CASE("atom expansion is multiplicative") {
  Context ctx{2, true};
  TauParams tau = TauParams::standard(ctx, 2);
  LFactorExpression a(ctx), b(ctx);
  a.mul_num(l_factor(LKind::Std, 1, Rat(1, 2), tau.x));
  b.mul_den(l_factor(LKind::Ext2, 2, Rat(1), tau.x));
  RationalExpr prod = (a * b).expand();
  CHECK(frac_eq(prod, a.expand() * b.expand()));
}

TEST_CASE("json emission") {
  Context ctx{2, true};
  LFactorExpression e(ctx);
  e.mul_num(l_factor(LKind::Std, 1, Rat(1, 2), TauParams::standard(ctx, 1).x));
  std::string line = e.to_json_line();
  CHECK(line.find("\"kind\":\"std\"") != std::string::npos);
  CHECK(line.find("\"shift\":1/2") != std::string::npos);
  CHECK(line.front() == '{');
  CHECK(line.back() == '}');
}
