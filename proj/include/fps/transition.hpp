#pragma once

#include <optional>
#include <vector>

#include "fps/boettcher.hpp"

namespace fps {

/// Cyclic group {β ∘ εz ∘ β^{-1} : ε ∈ U_n}.
template <class Field>
struct TransitionGroup {
  int order = 1;
  Series<Field> beta;
  Series<Field> beta_inv;
  Series<Field> generator;
  std::vector<Series<Field>> elements;  // elements[j] = β ∘ ε_n^j z ∘ β^{-1}

  const Field& field() const { return beta.field(); }
};

namespace detail {

template <class Field>
Series<Field> conjugated_rotation(const Series<Field>& beta, const Series<Field>& beta_inv,
                                  const typename Field::Scalar& eps) {
  return compose(scale_argument(beta, eps), beta_inv);
}

template <class Field>
TransitionGroup<Field> group_from_beta(const Series<Field>& beta, int order) {
  const auto& f = beta.field();
  f.require_roots(order);
  TransitionGroup<Field> g;
  g.order = order;
  g.beta = beta;
  g.beta_inv = invert_unit(beta);
  for (const auto& e : roots_of_unity(f, order))
    g.elements.push_back(e.index == 0 ? Series<Field>::identity(f, beta.trunc())
                                      : conjugated_rotation(beta, g.beta_inv, value(f, e)));
  g.generator = g.elements[order > 1 ? 1 : 0];
  return g;
}

}  // namespace detail

/// G_A, every element checked against A ∘ g ≡ A.
template <class Field>
TransitionGroup<Field> transition_group(const BoettcherData<Field>& d) {
  auto g = detail::group_from_beta(d.beta, d.n);
  for (const auto& e : g.elements)
    if (!congruent(compose(d.A, e), d.A))
      throw InvariantViolation("transition element fails A ∘ φ = A at this truncation");
  return g;
}

/// G_A from the monic Böttcher function, so no root of c_n is needed.
template <class Field>
TransitionGroup<Field> transition_group(const Series<Field>& A) {
  require_gamma(A, "transition_group argument");
  BoettcherData<Field> d{A, A.ord(), monic_boettcher(A), 0};
  return transition_group(d);
}

/// Group of A^{∘l}: {β ∘ εz ∘ β^{-1} : ε ∈ U_{n^l}}.
template <class Field>
TransitionGroup<Field> iterate_group(const BoettcherData<Field>& d, int l) {
  if (l < 1) throw InvalidArgument("iterate_group needs l >= 1");
  long order = 1;
  for (int i = 0; i < l; ++i) {
    order *= d.n;
    if (order > 1 << 20) throw InvalidArgument("iterate group order too large");
  }
  return detail::group_from_beta(d.beta, static_cast<int>(order));
}

struct ElementOrder {
  std::optional<int> order;
  bool numerical = false;  // decided by a tolerance test (approx backend)
};

/// Least d <= bound with φ^{∘d} ≡ z at this truncation.
template <class Field>
ElementOrder element_order(const Series<Field>& phi, int bound) {
  require_unit(phi, "element_order argument");
  ElementOrder r;
  r.numerical = !Field::is_exact;
  auto p = phi;
  for (int d = 1; d <= bound; ++d) {
    if (is_identity(p)) {
      r.order = d;
      return r;
    }
    if (d < bound) p = compose(p, phi);
  }
  return r;
}

/// z · φ · φ^{∘2} ··· φ^{∘(d-1)}, a series of order d invariant under φ.
template <class Field>
Series<Field> series_from_transition(const Series<Field>& phi, int d) {
  if (d < 2) throw OrderMismatch("series_from_transition needs d >= 2");
  auto eo = element_order(phi, d);
  if (eo.order != d)
    throw OrderMismatch("transition element does not have order " + std::to_string(d));
  const auto& f = phi.field();
  auto acc = Series<Field>::identity(f, phi.trunc());
  auto it = phi;
  for (int i = 1; i < d; ++i) {
    acc = mul(acc, it, phi.trunc());
    if (i + 1 < d) it = compose(it, phi);
  }
  return acc;
}

template <class Field>
bool contains(const TransitionGroup<Field>& H, const Series<Field>& g) {
  for (const auto& h : H.elements)
    if (congruent(g, h)) return true;
  return false;
}

/// G ⊆ H, elementwise.
template <class Field>
bool subgroup_test(const TransitionGroup<Field>& G, const TransitionGroup<Field>& H) {
  if (H.order % G.order != 0) return false;
  for (const auto& g : G.elements)
    if (!contains(H, g)) return false;
  return true;
}

/// μ^{-1} ∘ G ∘ μ, the group of μ^{-1} ∘ A ∘ μ.
template <class Field>
TransitionGroup<Field> conjugate_group(const TransitionGroup<Field>& G, const Series<Field>& mu) {
  require_unit(mu, "conjugate_group unit");
  auto mu_inv = invert_unit(mu);
  TransitionGroup<Field> r;
  r.order = G.order;
  r.beta = compose(mu_inv, G.beta);
  r.beta_inv = compose(G.beta_inv, mu);
  for (const auto& g : G.elements) r.elements.push_back(compose(mu_inv, compose(g, mu)));
  r.generator = r.elements[G.order > 1 ? 1 : 0];
  return r;
}

/// The φ ∈ G_A with X2 = φ ∘ X1, when A ∘ X1 ≡ A ∘ X2.
template <class Field>
std::optional<Series<Field>> cancel_right(const Series<Field>& A, const Series<Field>& X1,
                                          const Series<Field>& X2) {
  if (X1.ord() < 1 || X2.ord() < 1) throw InvalidArgument("cancel_right needs ord X >= 1");
  if (!congruent(compose(A, X1), compose(A, X2))) return std::nullopt;
  auto G = transition_group(A);
  for (const auto& g : G.elements)
    if (congruent(X2, compose(g, X1))) return g;
  return std::nullopt;
}

/// Whether every element of G commutes with every element of H. Both groups
/// are conjugated by β_G, where G becomes {εz}; εz commutes with h' exactly
/// when h' is supported on indices ≡ 1 mod |G|. Generators suffice.
template <class Field>
bool groups_commute(const TransitionGroup<Field>& G, const TransitionGroup<Field>& H) {
  if (G.order == 1 || H.order == 1) return true;
  const auto& f = G.field();
  auto gamma = compose(G.beta_inv, H.beta);
  auto h = detail::conjugated_rotation(gamma, invert_unit(gamma), f.zeta(H.order, 1));
  for (int j = 0; j <= h.trunc(); ++j)
    if ((j % G.order) != 1 % G.order && !h.is_zero(j)) return false;
  return true;
}

}  // namespace fps
