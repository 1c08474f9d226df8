#include "fps/selftest.hpp"

#include <functional>
#include <random>

#include "fps/fps.hpp"

namespace fps {

namespace {

using ES = Series<ExactField>;

struct Runner {
  std::mt19937_64& rng;
  int per_suite;
  std::vector<SuiteResult> out;

  void suite(const std::string& name, const std::function<bool(int)>& prop) {
    SuiteResult r{name, 0, per_suite};
    for (int i = 0; i < per_suite; ++i) {
      bool ok = false;
      try {
        ok = prop(i);
      } catch (const Error&) {
        ok = false;
      }
      r.passed += ok;
    }
    out.push_back(r);
  }
};

}  // namespace

std::vector<SuiteResult> selftest(std::uint64_t seed, int N, int conductor, int per_suite) {
  ExactField f(conductor);
  std::mt19937_64 rng(seed);
  Runner run{rng, per_suite, {}};
  auto mono = [&](int k) { return ES::monomial(f, N, k); };
  // orders whose transition groups live in the field
  std::vector<int> orders;
  for (int n = 2; n <= 6; ++n)
    if (f.unit_group_order() % n == 0) orders.push_back(n);
  auto order = [&](int i) { return orders[i % orders.size()]; };

  run.suite("series: associativity", [&](int) {
    auto a = rnd::series(rng, f, N, 2, 8), b = rnd::unit(rng, f, N, 6), c = rnd::series(rng, f, N, 2, 6);
    return congruent(compose(compose(a, b), c), compose(a, compose(b, c)));
  });
  run.suite("series: unit inverse", [&](int) {
    auto u = rnd::unit(rng, f, N, 8);
    return is_identity(compose(u, invert_unit(u))) && is_identity(compose(invert_unit(u), u));
  });
  run.suite("boettcher: residual", [&](int i) {
    return boettcher_residual_ok(boettcher(rnd::series(rng, f, N, order(i), N)));
  });
  run.suite("transition: A∘φ = A", [&](int i) {
    auto A = rnd::series(rng, f, N, order(i), N);
    auto G = transition_group(A);
    for (const auto& g : G.elements)
      if (!congruent(compose(A, g), A)) return false;
    return true;
  });
  run.suite("solvers: right round trip", [&](int i) {
    auto A = rnd::series(rng, f, N, order(i), N / 2);
    auto X = rnd::series(rng, f, N, 1 + i % 2, 8);
    auto r = solve_right(compose(X, A), A);
    return r && congruent(*r, X);
  });
  run.suite("solvers: left count", [&](int i) {
    int n = order(i);
    auto A = rnd::series(rng, f, N, n, N / 2);
    auto X = rnd::series(rng, f, N, 1 + i % 2, 8);
    auto s = solve_left(compose(A, X), A);
    return s && static_cast<int>(s->size()) == n;
  });
  run.suite("decompose: class count", [&](int i) {
    int n = 2 + i;
    return static_cast<long>(ordered_factorizations(n).size()) == kalmar_count(n);
  });
  run.suite("decompose: classes recompose", [&](int i) {
    auto A = rnd::series(rng, f, N, order(i) * (i % 2 ? 2 : 1), N);
    if (A.ord() > N / 2) return true;
    BoettcherData<ExactField> D{A, A.ord(), monic_boettcher(A), 0};
    for (const auto& c : enumerate_classes(D))
      if (!congruent(recompose(c.factors), A)) return false;
    return true;
  });
  run.suite("symmetry: support vs Böttcher", [&](int i) {
    int m = 2 + i % 2;
    ES A = mono(m + 1);
    for (int j = 1; m + 1 + j * m <= N && j < 4; ++j) A[m + 1 + j * m] = f.from_int(1 + j);
    return static_cast<bool>(split_symmetric(A, m)) && boettcher_symmetry(boettcher(A), m);
  });
  run.suite("semigroup: commute criterion", [&](int i) {
    auto mu = rnd::unit(rng, f, N, 5);
    auto A = rnd::conjugate(mu, mono(2));
    auto B = rnd::conjugate(mu, mono(2 + i % 2));
    auto r = commute_check(A, B);
    return r.commute && r.direct;
  });
  return run.out;
}

}  // namespace fps
