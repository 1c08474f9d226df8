#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "fps/solvers.hpp"

namespace fps {

/// All (m, r) with A = z^r R(z^m), read from the support up to the truncation.
template <class Field>
struct SymmetryProfile {
  Series<Field> subject;
  std::vector<std::pair<int, int>> pairs;
  int maximal_m = 0;       // 0: no m >= 2
  bool monomial = false;   // single visible index; maximal_m is capped at N
};

template <class Field>
SymmetryProfile<Field> detect_symmetry(const Series<Field>& A) {
  const int o = A.ord();
  if (o == kInfOrder) throw ZeroInput("detect_symmetry of the zero series");
  SymmetryProfile<Field> p;
  p.subject = A;
  int g = 0;
  for (int i = o + 1; i <= A.trunc(); ++i)
    if (!A.is_zero(i)) g = std::gcd(g, i - o);
  if (g == 0) {
    p.monomial = true;
    g = std::max(A.trunc(), 2);
  }
  if (g >= 2) p.maximal_m = g;
  for (int m = 2; m <= g; ++m)
    if (p.monomial || g % m == 0) p.pairs.emplace_back(m, o % m);
  return p;
}

/// Whether β = z L(z^m).
template <class Field>
bool boettcher_symmetry(const BoettcherData<Field>& D, int m) {
  if (m < 2) throw InvalidArgument("boettcher_symmetry needs m >= 2");
  auto sp = split_symmetric(D.beta, m);
  return sp && sp.split->r == 1 % m;
}

/// Whether every element of G is z M(z^m).
template <class Field>
bool transition_symmetry(const TransitionGroup<Field>& G, int m) {
  if (m < 2) throw InvalidArgument("transition_symmetry needs m >= 2");
  for (const auto& g : G.elements) {
    auto sp = split_symmetric(g, m);
    if (!sp || sp.split->r != 1) return false;
  }
  return true;
}

template <class Field>
struct SymmetricFactor {
  Series<Field> C;  // z^r R(z^m), monic
  Series<Field> B;  // A = B ∘ C
};

/// A right factor C = z^r R(z^m) of A: built from the transition element of
/// least order d >= 2 with shape z M(z^m).
template <class Field>
std::optional<SymmetricFactor<Field>> symmetric_right_factor(const BoettcherData<Field>& D, int m) {
  if (m < 2) throw InvalidArgument("symmetric_right_factor needs m >= 2");
  auto G = detail::group_from_beta(D.beta, D.n);
  std::vector<int> idx;
  for (int j = 1; j < D.n; ++j) idx.push_back(j);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return D.n / std::gcd(a, D.n) < D.n / std::gcd(b, D.n); });
  for (int j : idx) {
    const auto& phi = G.elements[j];
    auto shape = split_symmetric(phi, m);
    if (!shape || shape.split->r != 1) continue;
    int d = D.n / std::gcd(j, D.n);
    auto C = detail::make_monic(series_from_transition(phi, d));
    if (!split_symmetric(C, m)) throw InvariantViolation("series from a z M(z^m) element is not symmetric");
    auto B = solve_right(D.A, C);
    if (!B) throw InvariantViolation("transition series is not a right factor: " + B.reason());
    return SymmetricFactor<Field>{C, *B};
  }
  return std::nullopt;
}

/// A1 = z^{r1} R1(z^{m/gcd(r2,m)}) ∘ μ^{-1}, A2 = μ ∘ z^{r2} R2(z^m).
template <class Field>
struct SymmetricDecomposition {
  Series<Field> mu;
  int r1 = 0;
  Series<Field> R1;
  int r2 = 0;
  Series<Field> R2;
};

template <class Field>
SymmetricDecomposition<Field> decompose_symmetric(const Series<Field>& A, const Series<Field>& A1,
                                                  const Series<Field>& A2, int m, int r) {
  require_gamma(A, "decompose_symmetric A");
  require_gamma(A1, "decompose_symmetric A1");
  require_gamma(A2, "decompose_symmetric A2");
  if (m < 2) throw InvalidArgument("decompose_symmetric needs m >= 2");
  if (!congruent(compose(A1, A2), A)) throw NotSymmetric("A1 ∘ A2 differs from A");
  auto sp = split_symmetric(A, m);
  if (!sp || sp.split->r != ((r % m) + m) % m)
    throw NotSymmetric("A is not z^" + std::to_string(r) + " R(z^" + std::to_string(m) + ")");
  auto su = extract_symmetric_unit(A2, m);
  if (!su) throw NotSymmetric("A2 has no symmetric unit form: " + su.reason());
  SymmetricDecomposition<Field> out;
  out.mu = su->mu;
  out.r2 = su->r;
  out.R2 = su->R;
  const int m1 = m / std::gcd(out.r2, m);
  auto outer = compose(A1, out.mu);
  auto s1 = split_symmetric(outer, m1);
  if (!s1)
    throw InvariantViolation("A1 ∘ μ breaks symmetry mod " + std::to_string(m1) + " at index " +
                             std::to_string(s1.offending_index));
  out.r1 = s1.split->r;
  out.R1 = s1.split->R;
  if ((static_cast<long>(out.r1) * out.r2 - sp.split->r) % m != 0)
    throw InvariantViolation("r1 r2 is not congruent to r mod m");
  return out;
}

struct ReznickFlags {
  bool iterate_symmetric = false;
  bool base_symmetric = false;
};

/// Symmetry of A^{∘s} and of A mod m. A is read only up to N - n^s + n,
/// the part of A that determines A^{∘s} mod z^{N+1}.
template <class Field>
ReznickFlags reznick_check(const Series<Field>& A, int s, int m) {
  require_gamma(A, "reznick_check argument");
  if (s < 1 || m < 2) throw InvalidArgument("reznick_check needs s >= 1, m >= 2");
  const int n = A.ord();
  long ns = 1;
  for (int i = 0; i < s; ++i) ns *= n;
  if (ns > A.trunc()) throw InvalidArgument("ord A^s exceeds the truncation");
  ReznickFlags f;
  f.iterate_symmetric = static_cast<bool>(split_symmetric(iterate(A, s), m));
  f.base_symmetric = static_cast<bool>(
      split_symmetric(A.truncated(A.trunc() - static_cast<int>(ns) + n), m));
  if (f.iterate_symmetric != f.base_symmetric)
    throw InvariantViolation("iterate and base symmetry disagree");
  return f;
}

}  // namespace fps
