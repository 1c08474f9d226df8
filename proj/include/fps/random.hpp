#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>

#include "fps/series.hpp"

namespace fps::rnd {

/// lead·z^order + integer coefficients in [-range, range] up to degree.
template <class Field>
Series<Field> series(std::mt19937_64& rng, const Field& f, int N, int order, int degree,
                     const Rational& lead = 1, int range = 3) {
  std::uniform_int_distribution<int> c(-range, range);
  Series<Field> s(f, N);
  s[order] = f.from_rational(lead);
  for (int k = order + 1; k <= std::min(N, degree); ++k) s[k] = f.from_int(c(rng));
  return s;
}

/// z + (non-zero z^2 term) + small integer terms; never linear.
template <class Field>
Series<Field> unit(std::mt19937_64& rng, const Field& f, int N, int degree, int range = 2) {
  auto s = series(rng, f, N, 1, degree, 1, range);
  if (N >= 2 && f.is_zero(s[2])) s[2] = f.one();
  return s;
}

/// μ ∘ A ∘ μ^{-1}.
template <class Field>
Series<Field> conjugate(const Series<Field>& mu, const Series<Field>& A) {
  return compose(mu, compose(A, invert_unit(mu)));
}

inline int pick(std::mt19937_64& rng, std::initializer_list<int> values) {
  std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
  return *(values.begin() + d(rng));
}

}  // namespace fps::rnd
