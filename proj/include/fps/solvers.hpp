#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fps/boettcher.hpp"
#include "fps/outcome.hpp"
#include "fps/transition.hpp"

namespace fps {

enum class SolutionKind { unique, finite_list, parametric };

template <class Field>
struct Solution {
  Series<Field> X;
  std::optional<Series<Field>> Y;
  bool residual_ok = false;
};

template <class Field>
struct SolutionFamily {
  SolutionKind kind = SolutionKind::unique;
  std::vector<Solution<Field>> solutions;
  std::optional<int> r;                 // parametric families z^r R(z^n)
  std::optional<Series<Field>> R;
};

template <class Field>
struct JointSolution {
  Series<Field> X;
  Series<Field> Y;
};

template <class Field>
struct CommonFactor {
  Series<Field> W;
  Series<Field> A_tilde;
  Series<Field> B_tilde;
};

/// S = μ ∘ z^r R(z^m).
template <class Field>
struct SymmetricUnit {
  Series<Field> mu;
  int r = 0;
  Series<Field> R;
};

namespace detail {

/// X with X ∘ A = F read off at the indices n·j only; the caller verifies
/// the remaining coefficients.
template <class Field>
Series<Field> outer_triangular(const Series<Field>& F, const Series<Field>& A) {
  const auto& f = F.field();
  const int n = A.ord();
  const int K = F.trunc() / n;
  Series<Field> X(f, K);
  std::vector<Series<Field>> powers{Series<Field>::monomial(f, A.trunc(), 0)};
  auto lead = f.one();
  for (int j = 1; j <= K; ++j) {
    powers.push_back(j == 1 ? A : mul(powers.back(), A, F.trunc()));
    lead = lead * A[n];
    auto acc = F.coeff(n * j);
    for (int i = 1; i < j; ++i)
      if (!f.structural_zero(X[i])) acc -= X[i] * powers[i].coeff(n * j);
    X[j] = acc / lead;
  }
  return X;
}

/// Monic rescaling: S / S[ord S].
template <class Field>
Series<Field> make_monic(const Series<Field>& s) {
  int o = s.ord();
  if (o == kInfOrder) throw InvalidArgument("zero series has no leading coefficient");
  return (s.field().one() / s[o]) * s;
}

}  // namespace detail

/// X with F = X ∘ A. Solvable iff (β'_F^{-1} ∘ β'_A)^m is supported on a single
/// residue class mod n; β' are the monic Böttcher functions. The closed form
/// is extended to the full determined precision by the triangular recursion
/// on the indices n·j and cross-checked against it.
template <class Field>
Outcome<Series<Field>> solve_right(const Series<Field>& F, const Series<Field>& A) {
  require_gamma(F, "solve_right F");
  require_gamma(A, "solve_right A");
  const auto& f = F.field();
  const int n = A.ord(), nm = F.ord();
  if (nm % n)
    throw OrderMismatch("ord A = " + std::to_string(n) + " does not divide ord F = " +
                        std::to_string(nm));
  const int m = nm / n;
  auto bF = monic_boettcher(F), bA = monic_boettcher(A);
  auto bA_inv = invert_unit(bA);
  auto T = pow(compose(invert_unit(bF), bA), m);
  auto sp = split_symmetric(T, n);
  if (!sp)
    return Outcome<Series<Field>>::failure(
        "no X with F = X∘A: (β_F^-1∘β_A)^" + std::to_string(m) + " has index " +
        std::to_string(sp.offending_index) + " outside the residue class of its order mod " +
        std::to_string(n));
  const auto& [r, R] = *sp.split;
  auto S = F[nm] * scale_argument(symmetric_mate(R, r, n), f.one() / A[n]);
  auto closed = compose(compose(bF, S), bA_inv);
  auto X = detail::outer_triangular(F, A);
  if (!congruent(closed, X))
    throw InvariantViolation("closed-form solution of F = X∘A disagrees with the triangular one");
  if (!congruent(compose(X, A), F))
    throw InvariantViolation("solution of F = X∘A fails verification");
  return X;
}

/// All n solutions X of F = A ∘ X (ord A = n divides ord F), indexed by ε ∈ U_n.
template <class Field>
Outcome<std::vector<Series<Field>>> solve_left(const Series<Field>& F, const Series<Field>& A) {
  require_gamma(F, "solve_left F");
  require_gamma(A, "solve_left A");
  const auto& f = F.field();
  const int n = A.ord(), nm = F.ord();
  if (nm % n)
    throw OrderMismatch("ord A = " + std::to_string(n) + " does not divide ord F = " +
                        std::to_string(nm));
  const int m = nm / n;
  const int N = F.trunc();
  auto bF = monic_boettcher(F), bA = monic_boettcher(A);
  auto bF_inv = invert_unit(bF);
  // c_A T^n = δ(c_F z^{nm}) with δ = β'_A^{-1} ∘ β'_F and T = β'_A^{-1} ∘ X ∘ β'_F
  auto delta = compose(invert_unit(bA), bF);
  auto P = (f.one() / A[n]) * divide_monomial(scale_argument(delta, F[nm]), 1);
  auto V = series_nth_root(P, n);
  auto T = times_monomial(substitute_power(V.truncated(N / nm + 1), nm), m).truncated(N);
  std::vector<Series<Field>> out;
  for (const auto& e : roots_of_unity(f, n)) {
    auto X = compose(bA, compose(value(f, e) * T, bF_inv));
    if (!congruent(compose(A, X), F))
      throw InvariantViolation("solution of F = A∘X fails verification");
    out.push_back(std::move(X));
  }
  return out;
}

/// (X, Y) = (β_A ∘ z^r R(z^n) ∘ β_B^{-1}, β_A ∘ z^r R^n(z) ∘ β_B^{-1}), so A∘X = Y∘B.
template <class Field>
JointSolution<Field> semiconjugacy_family(const Series<Field>& A, const Series<Field>& B, int r,
                                          const Series<Field>& R) {
  require_gamma(A, "semiconjugacy_family A");
  require_gamma(B, "semiconjugacy_family B");
  const int n = A.ord();
  if (B.ord() != n) throw OrderMismatch("semiconjugacy_family needs ord A = ord B");
  if (r < 0 || r >= n) throw InvalidArgument("r must lie in [0, n-1]");
  if (r == 0 && !R.is_zero(0))
    throw InvalidArgument("r = 0 needs R(0) = 0 so that X has order >= 1");
  auto bA = boettcher(A).beta;
  auto bB_inv = invert_unit(boettcher(B).beta);
  auto X = compose(compose(bA, assemble_symmetric(R, r, n)), bB_inv);
  auto Y = compose(compose(bA, symmetric_mate(R, r, n)), bB_inv);
  if (!congruent(compose(A, X), compose(Y, B)))
    throw InvariantViolation("semiconjugacy pair fails A∘X = Y∘B");
  return {X, Y};
}

/// μ, r, R with S = μ ∘ z^r R(z^m): ν solves S∘ε_m z = ν∘S; if ν ≠ z, μ is a
/// Böttcher function of the series built from ν, which makes ν linear.
template <class Field>
Outcome<SymmetricUnit<Field>> extract_symmetric_unit(const Series<Field>& S, int m) {
  require_gamma(S, "extract_symmetric_unit argument");
  const auto& f = S.field();
  if (m < 2) throw InvalidArgument("extract_symmetric_unit needs m >= 2");
  auto rotated = scale_argument(S, f.zeta(m, 1));
  auto nu = solve_right(rotated, S);
  if (!nu)
    return Outcome<SymmetricUnit<Field>>::failure("S∘ε_m z is not a left multiple of S: " +
                                                  nu.reason());
  Series<Field> mu = Series<Field>::identity(f, S.trunc());
  if (!is_identity(*nu)) {
    auto d = element_order(*nu, m);
    if (!d.order)
      return Outcome<SymmetricUnit<Field>>::failure(
          "transition unit has no order dividing " + std::to_string(m) + " at this truncation");
    auto G = series_from_transition(*nu, *d.order);
    mu = monic_boettcher(G);
  }
  auto T = compose(invert_unit(mu), S);
  auto sp = split_symmetric(T, m);
  if (!sp)
    return Outcome<SymmetricUnit<Field>>::failure("μ^-1∘S breaks symmetry at index " +
                                                  std::to_string(sp.offending_index));
  return SymmetricUnit<Field>{mu, sp.split->r, sp.split->R};
}

/// X, Y with X∘A = Y∘B, iff G_A and G_B commute elementwise.
template <class Field>
Outcome<JointSolution<Field>> solve_joint(const Series<Field>& A, const Series<Field>& B) {
  require_gamma(A, "solve_joint A");
  require_gamma(B, "solve_joint B");
  const auto& f = A.field();
  auto GA = transition_group(A), GB = transition_group(B);
  if (!groups_commute(GA, GB))
    return Outcome<JointSolution<Field>>::failure("transition groups of A and B do not commute");
  const int n = A.ord();
  const auto& bA = GA.beta;
  const auto& bA_inv = GA.beta_inv;
  auto Bt = compose(bA_inv, compose(B, bA));
  auto su = extract_symmetric_unit(Bt, n);
  if (!su) throw InvariantViolation("commuting groups but no symmetric split: " + su.reason());
  // A = β'∘ c z^n ∘ β'^{-1}: X̃(c z^n) = z^{nr} R(z^n)^n = Ỹ ∘ B̃
  auto Xt = scale_argument(symmetric_mate(su->R, su->r, n), f.one() / A[n]);
  auto Yt = pow(invert_unit(su->mu), n);
  JointSolution<Field> s{compose(Xt, bA_inv), compose(Yt, bA_inv)};
  if (!congruent(compose(s.X, A), compose(s.Y, B)))
    throw InvariantViolation("joint solution fails X∘A = Y∘B");
  return s;
}

/// W of order d with A = Ã∘W and B = B̃∘W, iff G_A ∩ G_B has a subgroup of order d.
template <class Field>
Outcome<CommonFactor<Field>> common_right_factor(const Series<Field>& A, const Series<Field>& B,
                                                 int d) {
  require_gamma(A, "common_right_factor A");
  require_gamma(B, "common_right_factor B");
  const int n = A.ord(), m = B.ord();
  if (d < 2 || n % d || m % d)
    throw OrderMismatch("d = " + std::to_string(d) + " must divide gcd(ord A, ord B)");
  auto GA = transition_group(A), GB = transition_group(B);
  const auto& phi = GA.elements[n / d];
  bool shared = false;
  for (int k = 1; k < d && !shared; ++k) shared = congruent(phi, GB.elements[k * (m / d)]);
  if (!shared)
    return Outcome<CommonFactor<Field>>::failure("G_A and G_B share no subgroup of order " +
                                                 std::to_string(d));
  auto W = detail::make_monic(series_from_transition(phi, d));
  auto At = solve_right(A, W), Bt = solve_right(B, W);
  if (!At || !Bt) throw InvariantViolation("common subgroup found but W is not a right factor");
  return CommonFactor<Field>{W, *At, *Bt};
}

/// X with A∘C = X∘D, iff C ∘ φ_D ∈ G_A ∘ C for the generator φ_D of G_D.
template <class Field>
Outcome<Series<Field>> factor_through(const Series<Field>& A, const Series<Field>& C,
                                      const Series<Field>& D) {
  require_gamma(A, "factor_through A");
  if (C.ord() < 1 || C.ord() == kInfOrder) throw InvalidArgument("factor_through needs ord C >= 1");
  require_gamma(D, "factor_through D");
  if ((static_cast<long>(A.ord()) * C.ord()) % D.ord())
    throw OrderMismatch("ord D must divide ord A · ord C");
  auto GA = transition_group(A), GD = transition_group(D);
  auto lhs = compose(C, GD.generator);
  bool found = false;
  for (const auto& g : GA.elements)
    if (congruent(lhs, compose(g, C))) {
      found = true;
      break;
    }
  if (!found)
    return Outcome<Series<Field>>::failure("C∘φ_D is not φ_A∘C for any φ_A in G_A");
  auto X = solve_right(compose(A, C), D);
  if (!X) throw InvariantViolation("criterion holds but A∘C = X∘D has no solution: " + X.reason());
  return X;
}

}  // namespace fps
