#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fps/boettcher.hpp"
#include "fps/outcome.hpp"

namespace fps {

struct OrderedFactorization {
  int n = 0;
  std::vector<int> parts;
  bool operator==(const OrderedFactorization&) const = default;
};

/// All tuples of integers >= 2 with product n, lexicographically ordered.
inline std::vector<OrderedFactorization> ordered_factorizations(int n) {
  if (n < 2) throw InvalidArgument("ordered_factorizations needs n >= 2");
  std::vector<OrderedFactorization> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 1) {
      out.push_back({n, cur});
      return;
    }
    for (int d = 2; d <= rest; ++d) {
      if (rest % d) continue;
      cur.push_back(d);
      rec(rest / d);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

/// H(n) = Σ_{d | n, d < n} H(d), H(1) = 1.
inline long kalmar_count(int n) {
  if (n < 1) throw InvalidArgument("kalmar_count needs n >= 1");
  std::vector<long> H(n + 1, 0);
  H[1] = 1;
  for (int k = 2; k <= n; ++k)
    for (int d = 1; d < k; ++d)
      if (k % d == 0) H[k] += H[d];
  return H[n];
}

template <class Field>
struct Decomposition {
  Series<Field> target;
  std::vector<Series<Field>> factors;
  std::vector<Series<Field>> bridges;
};

template <class Field>
Series<Field> recompose(const std::vector<Series<Field>>& factors) {
  if (factors.empty()) throw InvalidArgument("empty factor list");
  auto acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

/// [β∘c z^{n_1}, z^{n_2}, ..., z^{n_r}∘β^{-1}], c = 1 for a true Böttcher function.
template <class Field>
Decomposition<Field> canonical_decomposition(const BoettcherData<Field>& D,
                                             const OrderedFactorization& fac) {
  long prod = 1;
  for (int p : fac.parts) {
    if (p < 2) throw InvalidArgument("factorization parts must be >= 2");
    prod *= p;
  }
  if (fac.n != D.n || prod != D.n)
    throw OrderMismatch("factorization of " + std::to_string(fac.n) + " does not match ord A = " +
                        std::to_string(D.n));
  Decomposition<Field> out{D.A, {}, {}};
  if (fac.parts.size() == 1) {
    out.factors.push_back(D.A);
    return out;
  }
  const auto& f = D.A.field();
  const int N = D.A.trunc();
  const auto c = D.A[D.n] * power(f, D.beta[1], D.n - 1);
  auto beta_inv = invert_unit(D.beta);
  const int r = static_cast<int>(fac.parts.size());
  for (int i = 0; i < r; ++i) {
    auto zi = Series<Field>::monomial(f, N, fac.parts[i]);
    if (i == 0) zi = compose(D.beta, c * zi);
    if (i == r - 1) zi = compose(zi, beta_inv);
    out.factors.push_back(std::move(zi));
  }
  if (!congruent(recompose(out.factors), D.A))
    throw InvariantViolation("canonical decomposition does not recompose to A");
  return out;
}

template <class Field>
std::vector<Decomposition<Field>> enumerate_classes(const BoettcherData<Field>& D) {
  std::vector<Decomposition<Field>> out;
  for (const auto& fac : ordered_factorizations(D.n)) out.push_back(canonical_decomposition(D, fac));
  return out;
}

/// Units μ_1..μ_{k-1} with A_1 = Â_1∘μ_1^{-1}, A_i = μ_{i-1}∘Â_i∘μ_i^{-1},
/// A_k = μ_{k-1}∘Â_k, searched depth-first over the leading-root branches.
template <class Field>
Outcome<std::vector<Series<Field>>> equivalence_witness(const Decomposition<Field>& D1,
                                                        const Decomposition<Field>& D2) {
  using Result = Outcome<std::vector<Series<Field>>>;
  const auto& A = D1.factors;
  const auto& H = D2.factors;
  if (A.size() != H.size() || A.empty()) return Result::failure("decompositions differ in length");
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i].ord() != H[i].ord()) return Result::failure("factor " + std::to_string(i) + " orders differ");
  const std::size_t k = A.size();
  std::vector<Series<Field>> chain;
  std::function<bool(std::size_t, const std::optional<Series<Field>>&)> dfs =
      [&](std::size_t i, const std::optional<Series<Field>>& prev_inv) -> bool {
    auto lhs = prev_inv ? compose(*prev_inv, A[i]) : A[i];
    if (i + 1 == k) return congruent(lhs, H[i]);
    for (auto& mu : solve_unit_right(lhs, H[i])) {
      chain.push_back(mu);
      if (dfs(i + 1, invert_unit(mu))) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!dfs(0, std::nullopt)) return Result::failure("no bridge chain on any branch");
  for (std::size_t i = 0; i < k; ++i) {
    auto rhs = H[i];
    if (i > 0) rhs = compose(chain[i - 1], rhs);
    if (i + 1 < k) rhs = compose(rhs, invert_unit(chain[i]));
    if (!congruent(A[i], rhs)) throw InvariantViolation("bridge chain fails verification");
  }
  return chain;
}

template <class Field>
struct EngstromRefinement {
  Series<Field> U, V;
  Series<Field> A_tilde, B_tilde, C_tilde, D_tilde;  // may have order 1
};

/// For A∘C = B∘D: U, V of orders gcd(ord A, ord B), gcd(ord C, ord D) with
/// A = U∘Ã, B = U∘B̃, C = C̃∘V, D = D̃∘V and Ã∘C̃ = B̃∘D̃.
template <class Field>
EngstromRefinement<Field> engstrom_refine(const Series<Field>& A, const Series<Field>& C,
                                          const Series<Field>& B, const Series<Field>& D) {
  for (const auto* s : {&A, &B, &C, &D}) require_gamma(*s, "engstrom_refine argument");
  auto F = compose(A, C);
  if (!congruent(F, compose(B, D))) throw NotADoubleDecomposition("A∘C differs from B∘D");
  const auto& f = F.field();
  const int N = F.trunc();
  const int a = A.ord(), b = B.ord(), c = C.ord(), d = D.ord();
  BoettcherData<Field> DF{F, F.ord(), monic_boettcher(F), 0};
  auto canon_ac = canonical_decomposition(DF, {DF.n, {a, c}});
  auto canon_bd = canonical_decomposition(DF, {DF.n, {b, d}});
  auto w1 = equivalence_witness(Decomposition<Field>{F, {A, C}, {}}, canon_ac);
  auto w2 = equivalence_witness(Decomposition<Field>{F, {B, D}, {}}, canon_bd);
  if (!w1 || !w2) throw InvariantViolation("decomposition not equivalent to its canonical class");
  const auto& nu = (*w1)[0];
  const auto& nu2 = (*w2)[0];
  const int u = std::gcd(a, b), v = std::gcd(c, d);
  const auto lead = F[DF.n];
  auto mono = [&](int k) { return Series<Field>::monomial(f, N, k); };
  EngstromRefinement<Field> out;
  out.U = compose(DF.beta, lead * mono(u));
  out.V = compose(mono(v), invert_unit(DF.beta));
  out.A_tilde = compose(mono(a / u), invert_unit(nu));
  out.B_tilde = compose(mono(b / u), invert_unit(nu2));
  out.C_tilde = compose(nu, mono(c / v));
  out.D_tilde = compose(nu2, mono(d / v));
  bool ok = congruent(compose(out.U, out.A_tilde), A) && congruent(compose(out.U, out.B_tilde), B) &&
            congruent(compose(out.C_tilde, out.V), C) && congruent(compose(out.D_tilde, out.V), D) &&
            congruent(compose(out.A_tilde, out.C_tilde), compose(out.B_tilde, out.D_tilde));
  if (!ok) throw InvariantViolation("refinement relations fail");
  return out;
}

}  // namespace fps
