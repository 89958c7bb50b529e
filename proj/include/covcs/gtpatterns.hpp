#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "covcs/scalar.hpp"

namespace covcs {

/// Strict Gelfand-Tsetlin pattern: triangular array rows[i-1] = (a_{i,1},...),
/// row i of length d-i+1, strictly decreasing rows, interleaving
/// a_{i,j} >= a_{i+1,j} >= a_{i,j+1}.
struct GTPattern {
  std::vector<std::vector<int>> rows;

  int d() const { return int(rows.size()); }
  int at(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-based

  void validate() const {
    int n = d();
    for (int i = 1; i <= n; ++i) {
      if (int(rows[i - 1].size()) != n - i + 1)
        throw std::invalid_argument("GTPattern: bad row length");
      for (int j = 1; j < n - i + 1; ++j)
        if (!(at(i, j) > at(i, j + 1)))
          throw std::invalid_argument("GTPattern: row not strictly decreasing");
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j <= n - i; ++j)
        if (!(at(i, j) >= at(i + 1, j) && at(i + 1, j) >= at(i, j + 1)))
          throw std::invalid_argument("GTPattern: interleaving violated");
  }

  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) os << " / ";
      for (size_t j = 0; j < rows[i].size(); ++j) {
        if (j) os << " ";
        os << rows[i][j];
      }
    }
    return os.str();
  }
};

/// Decoration statistics. d_i = sum_j (a_{i,j} - (d-i+1-j)) is the excess of
/// row i over the ground staircase; h_{i,j} = sum_{v>=j} (a_{i,v} - a_{i-1,v+1});
/// boxed: a_{i,j} = a_{i-1,j}; circled: a_{i,j} = a_{i-1,j+1}.
struct PatternStats {
  std::vector<int> d;                         // d[i-1] = d_i
  std::vector<std::vector<int>> h;            // h[i-2][j-1] = h_{i,j}, i >= 2
  std::vector<std::pair<int, int>> boxed;     // (i,j), 1-based, i >= 2
  std::vector<std::pair<int, int>> circled;
  std::vector<std::pair<int, int>> plain;     // neither boxed nor circled
};

inline PatternStats pattern_stats(const GTPattern& p) {
  PatternStats st;
  int n = p.d();
  for (int i = 1; i <= n; ++i) {
    int di = 0;
    for (int j = 1; j <= n - i + 1; ++j) di += p.at(i, j) - (n - i + 1 - j);
    st.d.push_back(di);
  }
  for (int i = 2; i <= n; ++i) {
    std::vector<int> hrow;
    int len = n - i + 1;
    for (int j = 1; j <= len; ++j) {
      int hij = 0;
      for (int v = j; v <= len; ++v) hij += p.at(i, v) - p.at(i - 1, v + 1);
      hrow.push_back(hij);
      if (p.at(i, j) == p.at(i - 1, j)) st.boxed.push_back({i, j});
      else if (p.at(i, j) == p.at(i - 1, j + 1)) st.circled.push_back({i, j});
      else st.plain.push_back({i, j});
    }
    st.h.push_back(std::move(hrow));
  }
  return st;
}

/// Enumerate all strict interleaving patterns below `top` whose row excesses
/// d_i are all divisible by r. Depth-first with interleaving bounds and
/// per-row divisibility pruning.
inline void enumerate_patterns(const std::vector<int>& top, int r,
                               const std::function<void(const GTPattern&)>& emit) {
  for (size_t j = 0; j + 1 < top.size(); ++j)
    if (!(top[j] > top[j + 1]))
      throw std::invalid_argument("enumerate_patterns: top row not strict");
  GTPattern p;
  int n = int(top.size());
  p.rows.reserve(n);  // references into rows stay valid during recursion
  p.rows.push_back(top);

  // rows are filled one at a time; `next` accumulates the row under build
  std::function<void(int)> fill_row = [&](int i) {  // i = 1-based row done
    if (i == n) {
      emit(p);
      return;
    }
    const std::vector<int>& prev = p.rows[i - 1];
    int len = n - i;  // length of row i+1
    std::vector<int> next(len);
    std::function<void(int)> place = [&](int j) {  // 0-based position
      if (j == len) {
        int di = 0;
        for (int t = 0; t < len; ++t) di += next[t] - (len - 1 - t);
        if (di % r != 0) return;
        p.rows.push_back(next);
        fill_row(i + 1);
        p.rows.pop_back();
        return;
      }
      int hi = prev[j];
      int lo = prev[j + 1];
      if (j > 0) hi = std::min(hi, next[j - 1] - 1);
      for (int v = hi; v >= lo; --v) {
        next[j] = v;
        place(j + 1);
      }
    };
    place(0);
  };
  fill_row(1);
}

inline std::vector<GTPattern> enumerate_patterns(const std::vector<int>& top, int r) {
  std::vector<GTPattern> out;
  enumerate_patterns(top, r, [&](const GTPattern& p) { out.push_back(p); });
  return out;
}

/// The monomial of a divisibility-filtered pattern (without the Gauss-sum
/// coefficient):
///   prod_{l=1..k} prod_{i=r(l-1)+2}^{rl} q^{d_i/r}
///   prod_{l=1..k-1} q^{-(r-1) d_{rl+1}/r}
///   prod_{l=1..k-1} x_{(l,l+1)}^{d_{rl+1}/r}.
inline FormalScalar pattern_monomial(Context ctx, const GTPattern& p, int r, int k) {
  if (p.d() != r * k) throw std::invalid_argument("pattern_monomial: rk != d");
  PatternStats st = pattern_stats(p);
  int qexp = 0;  // exponent of q
  FormalScalar mono = FormalScalar::one(ctx);
  for (int l = 1; l <= k; ++l)
    for (int i = r * (l - 1) + 2; i <= r * l; ++i) {
      if (st.d[i - 1] % r != 0) throw std::domain_error("pattern_monomial: r does not divide d_i");
      qexp += st.d[i - 1] / r;
    }
  for (int l = 1; l <= k - 1; ++l) {
    int drl = st.d[r * l];  // d_{rl+1}
    if (drl % r != 0) throw std::domain_error("pattern_monomial: r does not divide d_{rl+1}");
    qexp += -(r - 1) * (drl / r);
    int e = drl / r;
    if (e != 0)
      mono *= FormalScalar::variable(ctx, var_x(l), e) *
              FormalScalar::variable(ctx, var_x(l + 1), -e);
  }
  return FormalScalar::q_pow(ctx, qexp) * mono;
}

/// Total degree in the ratio variables x_{(l,l+1)}.
inline int pattern_degree(const GTPattern& p, int r, int k) {
  PatternStats st = pattern_stats(p);
  int deg = 0;
  for (int l = 1; l <= k - 1; ++l) deg += st.d[r * l] / r;
  return deg;
}

/// The Gauss-sum coefficient prod_{boxed (i,j)} g(2 h_{i,j}), reduced.
/// Defined only for patterns whose every decorated entry is boxed or circled.
inline FormalScalar pattern_coeff_G(Context ctx, const GTPattern& p) {
  PatternStats st = pattern_stats(p);
  if (!st.plain.empty())
    throw std::domain_error(
        "pattern_coeff_G: entry neither boxed nor circled; rule not specified");
  std::vector<std::pair<int, int>> raw;
  for (auto [i, j] : st.boxed) raw.push_back({2 * st.h[i - 2][j - 1], 1});
  return gauss_reduce(ctx, raw);
}

/// The unique pattern of maximal monomial degree for top row (rk-1, ..., 0):
/// rows rl+1 are full staircases a_{rl+1,j} = rk - j, and the remaining
/// entries satisfy a_{i,j} = a_{i-1,j+1} on the B-range,
/// a_{i,j} = r(k+l-1)-i-j+1.
inline GTPattern top_pattern(int r, int k) {
  int n = r * k;
  GTPattern p;
  for (int i = 1; i <= n; ++i) {
    int len = n - i + 1;
    std::vector<int> row(len);
    if (i == 1) {
      for (int j = 1; j <= len; ++j) row[j - 1] = n - j;
    } else {
      int l = (i - 2) / r + 1;  // r(l-1)+1 < i <= rl+1
      for (int j = 1; j <= len; ++j)
        row[j - 1] = (j <= r * (k - l)) ? n - j : r * (k + l - 1) - i - j + 1;
    }
    p.rows.push_back(std::move(row));
  }
  p.validate();
  PatternStats st = pattern_stats(p);
  // a_{i,j} = a_{i-1,j+1} on the B-range, and d_{rl+1} = r^2 l (k-l)
  for (int l = 1; l <= k - 1; ++l)
    if (st.d[r * l] != r * r * l * (k - l))
      throw std::logic_error("top_pattern: d_{rl+1} mismatch");
  for (int l = 1; l <= k; ++l)
    for (int i = r * (l - 1) + 2; i < r * l + 1; ++i)
      for (int j = r * (k - l) + 1; j <= n - i + 1; ++j)
        if (p.at(i, j) != p.at(i - 1, j + 1))
          throw std::logic_error("top_pattern: claim a_{i,j} = a_{i-1,j+1} fails");
  return p;
}

/// The closed-form highest monomial:
/// (-1)^{rk(k-1)/2} q^{-r(r+1)k(k-1)/4} prod_i x_{(i,i+1)}^{r i (k-i)}.
inline FormalScalar desired_monomial(Context ctx, int r, int k) {
  long long sign_exp = (long long)r * k * (k - 1) / 2;
  long long qexp4 = (long long)r * (r + 1) * k * (k - 1);  // 4 * exponent
  if (qexp4 % 4 != 0) throw std::logic_error("desired_monomial: non-integral q power");
  FormalScalar out = FormalScalar::q_pow(ctx, int(-qexp4 / 4));
  if (sign_exp % 2 == 1) out = -out;
  for (int i = 1; i <= k - 1; ++i) {
    int e = r * i * (k - i);
    out *= FormalScalar::variable(ctx, var_x(i), e) *
           FormalScalar::variable(ctx, var_x(i + 1), -e);
  }
  return out;
}

inline std::string pattern_json_line(const GTPattern& p) {
  PatternStats st = pattern_stats(p);
  std::ostringstream os;
  os << "{\"rows\":[";
  for (size_t i = 0; i < p.rows.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < p.rows[i].size(); ++j) {
      if (j) os << ",";
      os << p.rows[i][j];
    }
    os << "]";
  }
  os << "],\"d\":[";
  for (size_t i = 0; i < st.d.size(); ++i) {
    if (i) os << ",";
    os << st.d[i];
  }
  os << "],\"boxed\":" << st.boxed.size() << ",\"circled\":" << st.circled.size()
     << ",\"plain\":" << st.plain.size() << "}";
  return os.str();
}

}  // namespace covcs
