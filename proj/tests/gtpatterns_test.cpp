#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "covcs/gtpatterns.hpp"
#include "test_util.hpp"

using namespace covcs;

namespace {

/// Independent oracle: brute-force all strict interleaving rows with no
/// divisibility machinery, then filter.
void brute_force(const std::vector<int>& top, int r,
                 std::vector<GTPattern>& out) {
  int n = int(top.size());
  GTPattern p;
  p.rows.reserve(n);
  p.rows.push_back(top);
  std::function<void()> rec = [&]() {
    int i = int(p.rows.size());
    if (i == n) {
      GTPattern q = p;
      bool ok = true;
      for (int row = 2; row <= n && ok; ++row) {
        int len = n - row + 1;
        int di = 0;
        for (int j = 1; j <= len; ++j) di += q.at(row, j) - (len - j);
        ok = di % r == 0;
      }
      if (ok) out.push_back(q);
      return;
    }
    const auto& prev = p.rows.back();
    int len = n - i;
    std::vector<int> row(len);
    std::function<void(int)> fill = [&](int j) {
      if (j == len) {
        p.rows.push_back(row);
        rec();
        p.rows.pop_back();
        return;
      }
      for (int v = prev[j + 1]; v <= prev[j]; ++v) {
        if (j > 0 && v >= row[j - 1]) continue;
        row[j] = v;
        fill(j + 1);
      }
    };
    fill(0);
  };
  rec();
}

}  // namespace

TEST_CASE("enumeration against the brute-force oracle") {
  // d = 1
  auto single = enumerate_patterns({5}, 2);
  CHECK(single.size() == 1);
  // r = 1, d = 2, top = (1,0): all strict interleavings
  auto small = enumerate_patterns({1, 0}, 1);
  std::vector<GTPattern> oracle;
  brute_force({1, 0}, 1, oracle);
  CHECK(small.size() == oracle.size());
  CHECK(small.size() == 2);
  // assorted tops and divisibility filters
  for (int r : {1, 2, 3}) {
    for (std::vector<int> top :
         {std::vector<int>{3, 1, 0}, {4, 2, 1}, {3, 2, 1, 0}, {5, 3, 2, 0}}) {
      auto fast = enumerate_patterns(top, r);
      std::vector<GTPattern> slow;
      brute_force(top, r, slow);
      REQUIRE(fast.size() == slow.size());
      std::vector<std::string> fs, ss;
      for (const auto& p : fast) fs.push_back(p.str());
      for (const auto& p : slow) ss.push_back(p.str());
      std::sort(fs.begin(), fs.end());
      std::sort(ss.begin(), ss.end());
      CHECK(fs == ss);
    }
  }
  for (const auto& p : enumerate_patterns({3, 2, 1, 0}, 2)) p.validate();
  CHECK_THROWS_AS(enumerate_patterns({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("pattern statistics") {
  GTPattern p{{{3, 2, 1, 0}, {3, 2, 0}, {3, 2}, {2}}};
  p.validate();
  PatternStats st = pattern_stats(p);
  CHECK(st.d == std::vector<int>{0, 2, 4, 2});
  // h_{2,1}=2, h_{2,2}=1, h_{3,1}=3, h_{3,2}=2
  CHECK(st.h[0][0] == 2);
  CHECK(st.h[0][1] == 1);
  CHECK(st.h[1][0] == 3);
  CHECK(st.h[1][1] == 2);
  CHECK(st.boxed.size() == 4);
  CHECK(st.plain.empty());
}

TEST_CASE("top pattern closed forms") {
  // r = k = 2: the known 4-row array
  GTPattern p22 = top_pattern(2, 2);
  CHECK(p22.rows ==
        std::vector<std::vector<int>>{{3, 2, 1, 0}, {3, 2, 0}, {3, 2}, {2}});
  // r = k = 3: the 9-row array
  GTPattern p33 = top_pattern(3, 3);
  CHECK(p33.rows == std::vector<std::vector<int>>{{8, 7, 6, 5, 4, 3, 2, 1, 0},
                                                  {8, 7, 6, 5, 4, 3, 1, 0},
                                                  {8, 7, 6, 5, 4, 3, 0},
                                                  {8, 7, 6, 5, 4, 3},
                                                  {8, 7, 6, 4, 3},
                                                  {8, 7, 6, 3},
                                                  {8, 7, 6},
                                                  {7, 6},
                                                  {6}});
  PatternStats st = pattern_stats(p33);
  CHECK(st.d[3] == 18);  // d_4
  CHECK(st.d[6] == 18);  // d_7
  // d_{rl+1} = r^2 l (k-l)
  for (auto [r, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    GTPattern p = top_pattern(r, k);
    PatternStats s = pattern_stats(p);
    for (int l = 1; l <= k - 1; ++l) CHECK(s.d[r * l] == r * r * l * (k - l));
  }
}

TEST_CASE("pattern monomial and coefficient on the reference arrays") {
  Context ctx4{4, true};
  GTPattern p22 = top_pattern(2, 2);
  // C = q^{-3}
  CHECK(pattern_coeff_G(ctx4, p22) == FormalScalar::q_pow(ctx4, -3));
  // full value: C * monomial = desired monomial
  CHECK(pattern_coeff_G(ctx4, p22) * pattern_monomial(ctx4, p22, 2, 2) ==
        desired_monomial(ctx4, 2, 2));

  for (int m : {3, 6}) {
    Context ctx{m, true};
    GTPattern p33 = top_pattern(3, 3);
    FormalScalar full = pattern_coeff_G(ctx, p33) * pattern_monomial(ctx, p33, 3, 3);
    // -q^{-18} x_{(1,2)}^6 x_{(2,3)}^6
    CHECK(full == desired_monomial(ctx, 3, 3));
    FormalScalar expect =
        FormalScalar::q_pow(ctx, -18).scaled(Rat(-1)) *
        FormalScalar::variable(ctx, var_x(1), 6) *
        FormalScalar::variable(ctx, var_x(2), 6 - 6) *
        FormalScalar::variable(ctx, var_x(3), -6);
    CHECK(full == expect);
  }
  // all-zero-excess pattern has monomial 1
  Context ctx1{2, true};
  GTPattern ground{{{2, 1, 0}, {1, 0}, {0}}};
  CHECK(pattern_monomial(ctx1, ground, 1, 3) == FormalScalar::one(ctx1));
  // patterns with empty boxed set have coefficient 1
  CHECK(pattern_coeff_G(ctx1, ground) == FormalScalar::one(ctx1));
}

TEST_CASE("coefficient rule rejects undecorated entries") {
  Context ctx{2, true};
  // middle entry strictly between its upper neighbors
  GTPattern p{{{4, 2, 0}, {3, 1}, {2}}};
  p.validate();
  CHECK_THROWS_AS(pattern_coeff_G(ctx, p), std::domain_error);
}

TEST_CASE("maximal monomial is the top pattern") {
  for (auto [r, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {3, 2}}) {
    int d = r * k;
    std::vector<int> top(d);
    for (int j = 0; j < d; ++j) top[j] = d - 1 - j;
    auto all = enumerate_patterns(top, r);
    GTPattern best = top_pattern(r, k);
    int target = r * k * (k * k - 1) / 6;
    CHECK(pattern_degree(best, r, k) == target);
    int count_max = 0;
    for (const auto& p : all) {
      int deg = pattern_degree(p, r, k);
      CHECK(deg <= target);
      if (deg == target) {
        ++count_max;
        CHECK(p.rows == best.rows);
      }
    }
    CHECK(count_max == 1);
  }
}

TEST_CASE("json lines") {
  GTPattern p = top_pattern(2, 2);
  std::string line = pattern_json_line(p);
  CHECK(line.find("\"rows\":[[3,2,1,0]") != std::string::npos);
  CHECK(line.find("\"d\":[0,2,4,2]") != std::string::npos);
}
