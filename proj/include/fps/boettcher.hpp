#pragma once

#include <vector>

#include "fps/detail/power_table.hpp"
#include "fps/series.hpp"

namespace fps {

/// A together with a Böttcher function: A ∘ β = β ∘ z^n.
template <class Field>
struct BoettcherData {
  Series<Field> A;
  int n = 0;
  Series<Field> beta;
  int branch = 0;
};

namespace detail {

/// Solves P ∘ w = Q for a unit w given its linear coefficient w1, where
/// ord P = p and rhs(t, table) returns the target coefficient of z^t (it may
/// read w_1..w_{t-p}). One coefficient of w per index t = j + p - 1.
template <class Field, class Rhs>
Series<Field> solve_inner_unit(const Series<Field>& P, int p, const typename Field::Scalar& w1,
                               int tmax, Rhs rhs) {
  const auto& f = P.field();
  PowerTable<Field> w(f, tmax, tmax);
  w.push(w1);
  auto pivot = f.from_int(p) * P[p] * power(f, w1, p - 1);
  if (f.is_zero(pivot)) throw InvariantViolation("zero pivot in triangular series solve");
  for (int t = p + 1; t <= tmax; ++t) {
    w.push(f.zero());
    auto e = f.zero();
    for (int i = p; i <= std::min(t, P.trunc()); ++i)
      if (!f.structural_zero(P[i])) e += P[i] * w.at(i, t);
    w.replace_last((rhs(t, w) - e) / pivot);
  }
  return w.series();
}

}  // namespace detail

/// Branch-0 Böttcher function; β is determined modulo z^{N-n+2}.
template <class Field>
BoettcherData<Field> boettcher(const Series<Field>& A) {
  require_gamma(A, "boettcher argument");
  const auto& f = A.field();
  const int n = A.ord();
  auto w1 = f.nth_root(f.one() / A[n], n - 1);
  auto beta = detail::solve_inner_unit(A, n, w1, A.trunc(), [&](int t, const auto& w) {
    return (t % n == 0) ? w.w(t / n) : f.zero();
  });
  return {A, n, std::move(beta), 0};
}

/// β' with β'_1 = 1 and A ∘ β' = β' ∘ c_n z^n. Differs from a Böttcher
/// function by a linear factor only, and needs no roots of c_n.
template <class Field>
Series<Field> monic_boettcher(const Series<Field>& A) {
  require_gamma(A, "monic_boettcher argument");
  const auto& f = A.field();
  const int n = A.ord();
  const auto c = A[n];
  std::vector<typename Field::Scalar> cpow{f.one()};
  return detail::solve_inner_unit(A, n, f.one(), A.trunc(), [&](int t, const auto& w) {
    if (t % n) return f.zero();
    int k = t / n;
    while (static_cast<int>(cpow.size()) <= k) cpow.push_back(cpow.back() * c);
    return w.w(k) * cpow[k];
  });
}

/// Böttcher data on the given branch: β_0 ∘ ε^branch z, ε ∈ U_{n-1} primitive.
template <class Field>
BoettcherData<Field> boettcher(const Series<Field>& A, int branch) {
  auto d = boettcher(A);
  if (branch == 0) return d;
  if (branch < 0 || branch > d.n - 2) throw InvalidArgument("branch out of range [0, n-2]");
  d.beta = scale_argument(d.beta, A.field().zeta(d.n - 1, branch));
  d.branch = branch;
  return d;
}

/// {β ∘ εz : ε ∈ U_{n-1}}, indexed by root of unity index.
template <class Field>
std::vector<Series<Field>> all_boettcher(const BoettcherData<Field>& d) {
  const auto& f = d.A.field();
  std::vector<Series<Field>> out;
  for (const auto& e : roots_of_unity(f, d.n - 1)) out.push_back(scale_argument(d.beta, value(f, e)));
  return out;
}

/// β^{-1} ∘ A ∘ β, which is z^n.
template <class Field>
Series<Field> normalize(const BoettcherData<Field>& d) {
  return compose(invert_unit(d.beta), compose(d.A, d.beta));
}

template <class Field>
bool boettcher_residual_ok(const BoettcherData<Field>& d) {
  const auto& f = d.A.field();
  auto zn = Series<Field>::monomial(f, d.A.trunc(), d.n);
  return congruent(compose(d.A, d.beta), compose(d.beta, zn));
}

/// All unit μ with P ∘ μ = Q (ord P = ord Q = p): one per p-th root of the
/// leading ratio. Empty when the orders differ.
template <class Field>
std::vector<Series<Field>> solve_unit_right(const Series<Field>& P, const Series<Field>& Q) {
  const auto& f = P.field();
  const int p = P.ord();
  if (p == kInfOrder || p < 1) throw InvalidArgument("solve_unit_right needs ord P >= 1");
  if (Q.ord() != p) return {};
  auto r0 = f.nth_root(Q[p] / P[p], p);
  int tmax = std::min(P.trunc(), Q.trunc());
  std::vector<Series<Field>> out;
  for (const auto& e : roots_of_unity(f, p)) {
    auto w1 = r0 * value(f, e);
    out.push_back(detail::solve_inner_unit(P, p, w1, tmax,
                                           [&](int t, const auto&) { return Q[t]; }));
  }
  return out;
}

}  // namespace fps
