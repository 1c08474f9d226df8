#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fps/boettcher.hpp"
#include "fps/outcome.hpp"

namespace fps {

/// coefficient · z^exponent.
template <class Field>
struct MonomialImage {
  typename Field::Scalar coefficient;
  int exponent = 0;
};

template <class Field>
struct Monomialization {
  Series<Field> beta;
  std::vector<MonomialImage<Field>> images;
};

template <class Field>
struct CommuteResult {
  bool commute = false;
  std::optional<typename Field::Scalar> c;  // β_A = β_B ∘ cz, when both are representable
  bool direct = false;
  bool criterion = false;
};

namespace detail {

/// Whether γ∘εz∘γ^{-1} has the form z H(z^K) for every ε ∈ U_M. The
/// coefficient of z^j is Σ_i γ_i ε^i [ψ^i]_j with ψ = γ^{-1}; it vanishes on
/// U_M iff each residue-class sum over i mod M vanishes, so no roots are needed.
template <class Field>
bool rotation_commutes(const Series<Field>& gamma, long M, long K) {
  if (M <= 1 || K <= 1) return true;
  const auto& f = gamma.field();
  auto psi = invert_unit(gamma);
  const int N = std::min(gamma.trunc(), psi.trunc());
  std::vector<Series<Field>> powers{Series<Field>::monomial(f, N, 0), psi.truncated(N)};
  for (int i = 2; i <= N; ++i) powers.push_back(mul(powers.back(), powers[1], N));
  const int classes = static_cast<int>(std::min<long>(M, N + 1));
  for (int j = 2; j <= N; ++j) {
    if ((j - 1) % K == 0) continue;
    std::vector<typename Field::Scalar> acc(classes, f.zero());
    for (int i = 1; i <= j; ++i)
      if (!f.structural_zero(gamma[i])) acc[i % M] += gamma[i] * powers[i][j];
    for (const auto& a : acc)
      if (!f.is_zero(a)) return false;
  }
  return true;
}

}  // namespace detail

/// c with β_A = β_B ∘ cz, or nothing. Branches differ by linear factors, so
/// linearity of β_B^{-1}∘β_A does not depend on them; c is reported for the
/// branches held in DA, DB.
template <class Field>
std::optional<typename Field::Scalar> shared_boettcher_scale(const BoettcherData<Field>& DA,
                                                             const BoettcherData<Field>& DB) {
  auto gamma = compose(invert_unit(DB.beta), DA.beta);
  for (int j = 2; j <= gamma.trunc(); ++j)
    if (!gamma.is_zero(j)) return std::nullopt;
  return gamma[1];
}

/// Root-free form of the shared-Böttcher test: the monic Böttcher functions agree.
template <class Field>
bool shares_boettcher(const Series<Field>& A, const Series<Field>& B) {
  require_gamma(A, "shares_boettcher A");
  require_gamma(B, "shares_boettcher B");
  return congruent(monic_boettcher(A), monic_boettcher(B));
}

namespace detail {

/// Decides a == b for approximate scalars with the two-threshold rule.
template <class Field>
bool scalar_equal_decided(const Field& f, const typename Field::Scalar& a,
                          const typename Field::Scalar& b) {
  if constexpr (Field::is_exact) {
    return a == b;
  } else {
    double scale = std::max({std::abs(f.to_complex(a)), std::abs(f.to_complex(b)), 1e-300});
    double rel = std::abs(f.to_complex(a) - f.to_complex(b)) / scale;
    if (rel <= f.tol) return true;
    if (rel >= std::sqrt(f.tol)) return false;
    throw ToleranceAmbiguous("commutation scale test inconclusive: relative difference " +
                             std::to_string(rel));
  }
}

}  // namespace detail

/// A∘B ≡ B∘A, decided by β'_A ≡ β'_B (compared where the truncation of A∘B
/// can see them) and c_B^{n-1} = c_A^{m-1}, i.e. c^{(n-1)(m-1)} = 1; always
/// cross-checked against the direct composition.
template <class Field>
CommuteResult<Field> commute_check(const Series<Field>& A, const Series<Field>& B) {
  require_gamma(A, "commute_check A");
  require_gamma(B, "commute_check B");
  const auto& f = A.field();
  const int n = A.ord(), m = B.ord();
  CommuteResult<Field> r;
  r.direct = congruent(compose(A, B), compose(B, A));
  const int window = std::min(A.trunc(), B.trunc()) - n * m + 1;
  bool same_beta = true;
  if (window >= 1)
    same_beta = congruent(monic_boettcher(A).truncated(window), monic_boettcher(B).truncated(window));
  r.criterion = same_beta && detail::scalar_equal_decided(f, power(f, B[m], n - 1), power(f, A[n], m - 1));
  try {
    r.c = shared_boettcher_scale(boettcher(A), boettcher(B));
  } catch (const RootNotRepresentable&) {
  }
  if (r.direct != r.criterion)
    throw InvariantViolation("commutation criterion disagrees with direct composition");
  r.commute = r.criterion;
  return r;
}

template <class Field>
CommuteResult<Field> commute_check(const BoettcherData<Field>& DA, const BoettcherData<Field>& DB) {
  return commute_check(DA.A, DB.A);
}

/// β with β^{-1}∘B∘β = c_B z^m for every generator; β is the Böttcher function of
/// the first generator (monic when its root is not representable).
template <class Field>
Outcome<Monomialization<Field>> monomialize(const std::vector<Series<Field>>& gens) {
  if (gens.empty()) throw InvalidArgument("monomialize needs at least one generator");
  for (const auto& g : gens) require_gamma(g, "monomialize generator");
  const auto& f = gens[0].field();
  const int n0 = gens[0].ord();
  auto b0 = monic_boettcher(gens[0]);
  auto lambda = f.one();
  try {
    lambda = f.nth_root(f.one() / gens[0][n0], n0 - 1);
  } catch (const RootNotRepresentable&) {
  }
  Monomialization<Field> out;
  out.beta = scale_argument(b0, lambda);
  auto beta_inv = invert_unit(out.beta);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& B = gens[i];
    const int m = B.ord();
    if (i > 0 && !congruent(b0, monic_boettcher(B)))
      return Outcome<Monomialization<Field>>::failure(
          "generator " + std::to_string(i) + " shares no Böttcher function with generator 0",
          static_cast<int>(i));
    MonomialImage<Field> img{B[m] * power(f, lambda, m - 1), m};
    auto want = Series<Field>::monomial(f, B.trunc(), m, img.coefficient);
    if (!congruent(compose(beta_inv, compose(B, out.beta)), want))
      throw InvariantViolation("conjugated generator is not the monomial image");
    out.images.push_back(std::move(img));
  }
  return out;
}

/// Solvability of X∘A^{∘l} = Y∘B^{∘s} for all l <= l_max, s <= s_max, by the
/// commuting-groups criterion on U_{n^l} and γ∘U_{m^s}∘γ^{-1}, γ = β_A^{-1}∘β_B.
template <class Field>
bool reversibility_probe(const Series<Field>& A, const Series<Field>& B, int l_max, int s_max) {
  require_gamma(A, "reversibility_probe A");
  require_gamma(B, "reversibility_probe B");
  if (l_max < 1 || s_max < 1) throw InvalidArgument("reversibility_probe bounds must be >= 1");
  auto gamma = compose(invert_unit(monic_boettcher(A)), monic_boettcher(B));
  const long n = A.ord(), m = B.ord();
  long K = 1;
  for (int l = 1; l <= l_max; ++l) {
    K *= n;
    long M = 1;
    for (int s = 1; s <= s_max; ++s) {
      M *= m;
      if (!detail::rotation_commutes(gamma, M, K)) return false;
    }
  }
  return true;
}

}  // namespace fps
