#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "fps/fps.hpp"

namespace fps::test {

using Terms = std::initializer_list<std::pair<int, Rational>>;
using ES = Series<ExactField>;
using AS = Series<ApproxField>;

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

template <class F>
Series<F> mk(const F& f, int N, Terms terms) {
  Series<F> s(f, N);
  for (auto& [k, c] : terms)
    if (k <= N) s[k] = s[k] + f.from_rational(c);
  return s;
}

inline ES ex(int N, Terms terms) { return mk(ExactField(24), N, terms); }

// dense rational polynomials, used by the naive oracles below
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

/// A(B) for polynomials, untruncated (plain Horner).
inline Poly poly_compose(const Poly& a, const Poly& b) {
  Poly r;
  for (std::size_t i = a.size(); i-- > 0;) r = poly_add(poly_mul(r, b), Poly{a[i]});
  return r;
}

inline Poly to_poly(const ES& s) {
  Poly p(s.trunc() + 1);
  for (int i = 0; i <= s.trunc(); ++i) p[i] = s[i].to_rational();
  return p;
}

inline bool matches(const ES& s, const Poly& p, int upto) {
  for (int i = 0; i <= upto; ++i) {
    Rational want = i < static_cast<int>(p.size()) ? p[i] : Rational(0);
    if (i > s.trunc() || s[i] != Cyclotomic(want)) return false;
  }
  return true;
}

}  // namespace fps::test

namespace fps::test {

/// Independent undetermined-coefficients solver: finds w_2..w_K (w_1 given)
/// such that residual(w) vanishes at index target(j) when w_j is the newest
/// unknown. Each step evaluates the residual twice (w_j = 0 and w_j = 1) with
/// naive polynomial composition and solves the resulting linear equation.
template <class Residual, class Target>
std::optional<Poly> brute_triangular(const Rational& w1, int K, Residual residual, Target target) {
  Poly w(K + 1);
  w[1] = w1;
  for (int j = 2; j <= K; ++j) {
    int t = target(j);
    w[j] = 0;
    Poly r0 = residual(w);
    w[j] = 1;
    Poly r1 = residual(w);
    Rational c0 = t < static_cast<int>(r0.size()) ? r0[t] : Rational(0);
    Rational c1 = t < static_cast<int>(r1.size()) ? r1[t] : Rational(0);
    if (c1 == c0) {
      if (c0 != 0) return std::nullopt;
      w[j] = 0;
      continue;
    }
    w[j] = -c0 / (c1 - c0);
  }
  return w;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

inline Poly monomial_poly(int k, Rational c = 1) {
  Poly p(k + 1);
  p[k] = c;
  return p;
}

inline ES from_poly(const Poly& p, int N) {
  ES s(ExactField(24), N);
  for (int i = 0; i <= N && i < static_cast<int>(p.size()); ++i) s[i] = Cyclotomic(p[i]);
  return s;
}

}  // namespace fps::test

namespace fps::test {

inline Poly poly_truncate(Poly p, int D) {
  if (static_cast<int>(p.size()) > D + 1) p.resize(D + 1);
  return p;
}

inline Rational at(const Poly& p, int i) { return i < static_cast<int>(p.size()) ? p[i] : Rational(0); }

/// Solves rows · x = rhs by Gaussian elimination over Q; nullopt when the
/// system is inconsistent. Free variables are set to 0.
inline std::optional<Poly> solve_linear(std::vector<Poly> rows, Poly rhs, int unknowns) {
  const int R = static_cast<int>(rows.size());
  for (auto& r : rows) r.resize(unknowns);
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < unknowns && row < R; ++c) {
    int p = row;
    while (p < R && rows[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(rows[p], rows[row]);
    std::swap(rhs[p], rhs[row]);
    for (int i = 0; i < R; ++i) {
      if (i == row || rows[i][c] == 0) continue;
      Rational k = rows[i][c] / rows[row][c];
      for (int j = c; j < unknowns; ++j) rows[i][j] -= k * rows[row][j];
      rhs[i] -= k * rhs[row];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int i = row; i < R; ++i)
    if (rhs[i] != 0) return std::nullopt;
  Poly x(unknowns);
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = rhs[i] / rows[i][pivot_col[i]];
  return x;
}

/// X with X∘A = F through degree D, from the linear system in X's coefficients.
inline std::optional<Poly> brute_right(const Poly& F, const Poly& A, int D) {
  int n = 0;
  while (A[n] == 0) ++n;
  const int K = D / n;
  std::vector<Poly> powers{Poly{1}};
  for (int j = 1; j <= K; ++j) powers.push_back(poly_truncate(poly_mul(powers.back(), A), D));
  std::vector<Poly> rows;
  Poly rhs;
  for (int t = 0; t <= D; ++t) {
    Poly r(K);
    for (int j = 1; j <= K; ++j) r[j - 1] = at(powers[j], t);
    rows.push_back(r);
    rhs.push_back(at(F, t));
  }
  auto x = solve_linear(rows, rhs, K);
  if (!x) return std::nullopt;
  Poly X(K + 1);
  for (int j = 1; j <= K; ++j) X[j] = (*x)[j - 1];
  return X;
}

/// Whether X∘A = Y∘B has a solution with ord X = ord B, ord Y = ord A through
/// degree D (X monic); linear in the coefficients of X and Y.
inline bool brute_joint(const Poly& A, const Poly& B, int D) {
  int n = 0, m = 0;
  while (A[n] == 0) ++n;
  while (B[m] == 0) ++m;
  const int KX = D / n, KY = D / m;
  std::vector<Poly> pa{Poly{1}}, pb{Poly{1}};
  for (int j = 1; j <= KX; ++j) pa.push_back(poly_truncate(poly_mul(pa.back(), A), D));
  for (int j = 1; j <= KY; ++j) pb.push_back(poly_truncate(poly_mul(pb.back(), B), D));
  // unknowns: x_{m+1..KX}, y_{n..KY}; x_m = 1
  if (m > KX) return true;
  const int ux = std::max(0, KX - m), uy = std::max(0, KY - n + 1);
  std::vector<Poly> rows;
  Poly rhs;
  for (int t = 0; t <= D; ++t) {
    Poly r(ux + uy);
    for (int j = m + 1; j <= KX; ++j) r[j - m - 1] = at(pa[j], t);
    for (int k = n; k <= KY; ++k) r[ux + k - n] = -at(pb[k], t);
    rows.push_back(r);
    rhs.push_back(-at(pa[m], t));
  }
  return solve_linear(rows, rhs, ux + uy).has_value();
}

}  // namespace fps::test
