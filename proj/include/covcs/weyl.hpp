#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "covcs/scalar.hpp"

namespace covcs {

using ExpVec = std::vector<int>;

/// Entrywise negation and reversal, matching the matrix involution
/// t -> J t^{-t} J on exponent vectors of torus elements.
inline ExpVec star(const ExpVec& a) {
  ExpVec r(a.rbegin(), a.rend());
  for (int& v : r) v = -v;
  return r;
}

/// Permutation of {0,...,d-1}; img[i] = w(i).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int d) : img(d) { std::iota(img.begin(), img.end(), 0); }
  explicit Perm(std::vector<int> v) : img(std::move(v)) {
    std::vector<char> seen(img.size(), 0);
    for (int x : img) {
      if (x < 0 || size_t(x) >= img.size() || seen[x])
        throw std::invalid_argument("Perm: not a bijection");
      seen[x] = 1;
    }
  }

  int d() const { return int(img.size()); }
  int operator()(int i) const { return img[i]; }

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < d(); ++i) r.img[img[i]] = i;
    return r;
  }

  /// (a*b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (int i = 0; i < a.d(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }

  bool is_identity() const {
    for (int i = 0; i < d(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  static Perm simple(int d, int i) {
    Perm w(d);
    std::swap(w.img[i], w.img[i + 1]);
    return w;
  }
  static Perm longest(int d) {
    Perm w(d);
    std::reverse(w.img.begin(), w.img.end());
    return w;
  }
};

/// Word in simple reflections; letter i stands for the reflection along
/// (i+1, i+2) in 1-based root coordinates.
using ReducedWord = std::vector<int>;

inline int length(const Perm& w) {
  int l = 0;
  for (int i = 0; i < w.d(); ++i)
    for (int j = i + 1; j < w.d(); ++j)
      if (w(i) > w(j)) ++l;
  return l;
}

/// Canonical reduced word (insertion-sort order): repeatedly strip the
/// first descent on the right.
inline ReducedWord reduced_word(Perm w) {
  ReducedWord rev;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i = 0; i + 1 < w.d(); ++i) {
      if (w(i) > w(i + 1)) {
        rev.push_back(i);
        std::swap(w.img[i], w.img[i + 1]);  // w := w * s_i
        progressed = true;
        break;
      }
    }
  }
  return ReducedWord(rev.rbegin(), rev.rend());
}

inline Perm word_to_perm(int d, const ReducedWord& word) {
  Perm w(d);
  for (int i : word) w = w * Perm::simple(d, i);
  return w;
}

/// Inversions {(i,j) : i<j, w(i) > w(j)} (pairs 0-based).
inline std::vector<std::pair<int, int>> inversions(const Perm& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < w.d(); ++i)
    for (int j = i + 1; j < w.d(); ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

/// The w^{-1} variant: {alpha in Phi^+ : w alpha < 0} = inversions(w^{-1}).
inline std::vector<std::pair<int, int>> inversions_of_inverse(const Perm& w) {
  return inversions(w.inverse());
}

/// (^w x)_i = x_{w^{-1}(i)}.
template <typename T>
std::vector<T> act_params(const Perm& w, const std::vector<T>& x) {
  std::vector<T> r(x.size());
  Perm wi = w.inverse();
  for (int i = 0; i < w.d(); ++i) r[i] = x[wi(i)];
  return r;
}

/// One step of the bracket action: w_alpha[a] replaces (a_i, a_{i+1}) by
/// (a_{i+1} - 1, a_i + 1) at alpha = (i, i+1).
inline ExpVec bracket_step(int i, ExpVec a) {
  int ai = a[i], aj = a[i + 1];
  a[i] = aj - 1;
  a[i + 1] = ai + 1;
  return a;
}

/// Iterated bracket action along a word, rightmost letter applied first.
inline ExpVec bracket_action(const ReducedWord& word, ExpVec a) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) a = bracket_step(*it, a);
  return a;
}

/// Monomial matrix with entries +-1: column i carries sign[i] at row perm(i).
struct SignedPerm {
  Perm perm;
  std::vector<int> signs;  // indexed by column

  explicit SignedPerm(int d) : perm(d), signs(d, 1) {}
  SignedPerm(Perm p, std::vector<int> s) : perm(std::move(p)), signs(std::move(s)) {
    for (int v : signs)
      if (v != 1 && v != -1) throw std::invalid_argument("SignedPerm: signs must be +-1");
  }

  int d() const { return perm.d(); }

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm r(a.perm * b.perm, std::vector<int>(a.d(), 1));
    for (int i = 0; i < a.d(); ++i) r.signs[i] = a.signs[b.perm(i)] * b.signs[i];
    return r;
  }
  SignedPerm inverse() const {
    SignedPerm r(perm.inverse(), std::vector<int>(d(), 1));
    for (int j = 0; j < d(); ++j) r.signs[j] = signs[r.perm(j)];
    return r;
  }
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.perm == b.perm && a.signs == b.signs;
  }

  /// The fixed representative of the simple reflection: the block
  /// ((0,-1),(1,0)) at rows/columns (i, i+1).
  static SignedPerm simple_rep(int d, int i) {
    SignedPerm r(d);
    r.perm = Perm::simple(d, i);
    r.signs[i] = 1;       // e_i -> e_{i+1}
    r.signs[i + 1] = -1;  // e_{i+1} -> -e_i
    return r;
  }

  static SignedPerm from_word(int d, const ReducedWord& word) {
    SignedPerm r(d);
    for (int i : word) r = r * simple_rep(d, i);
    return r;
  }
};

/// Factor a +-1 monomial matrix as t0 * w' with t0 diagonal +-1 and w' the
/// product of the fixed simple-reflection representatives along the
/// canonical reduced word of the underlying permutation.
inline std::pair<std::vector<int>, ReducedWord> sign_decompose(const SignedPerm& g) {
  ReducedWord word = reduced_word(g.perm);
  SignedPerm wp = SignedPerm::from_word(g.d(), word);
  SignedPerm t0 = g * wp.inverse();
  if (!t0.perm.is_identity())
    throw std::logic_error("sign_decompose: residue not diagonal");
  return {t0.signs, word};
}

/// delta_B(t_b) = prod_j |t_j|^{d-2j+1} = Q^{-2 sum_j b_j (d-2j+1)}
/// (j 1-based).
inline int modulus_exponent(const ExpVec& b, int d) {
  int e = 0;
  for (int j = 0; j < d; ++j) e += b[j] * (d - 2 * j - 1);
  return e;
}

inline FormalScalar modulus_char(Context ctx, const ExpVec& b, int d) {
  return FormalScalar::q_half_pow(ctx, -2 * modulus_exponent(b, d));
}

inline FormalScalar modulus_char_half(Context ctx, const ExpVec& b, int d) {
  return FormalScalar::q_half_pow(ctx, -modulus_exponent(b, d));
}

/// All permutations of {0..d-1} in lexicographic order.
inline std::vector<Perm> all_permutations(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace covcs
