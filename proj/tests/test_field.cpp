#include <doctest.h>

#include <random>

#include "fps/field.hpp"

using namespace fps;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomial of conductor 24 is x^8 - x^4 + 1") {
  const auto& t = detail::cyclo_tables(24);
  CHECK(t.phi == 8);
  std::vector<Integer> expect{1, 0, 0, 0, -1, 0, 0, 0, 1};
  CHECK(t.cyclotomic_poly == expect);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("zeta powers close up") {
  for (int L : {1, 3, 4, 5, 12, 24}) {
    Cyclotomic z = Cyclotomic::zeta_power(L, 1);
    Cyclotomic p(1L);
    for (int k = 0; k < L; ++k) p = p * z;
    CHECK(p.is_one());
  }
}

TEST_CASE("cyclotomic arithmetic matches complex evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rnd = [&] {
    std::vector<Rational> c(8);
    for (auto& x : c) x = q(d(rng), 1 + std::abs(d(rng)));
    return Cyclotomic::from_power_basis(24, c);
  };
  for (int it = 0; it < 200; ++it) {
    Cyclotomic a = rnd(), b = rnd();
    auto ca = a.to_complex(), cb = b.to_complex();
    CHECK(std::abs((a * b).to_complex() - ca * cb) < 1e-9 * (1 + std::abs(ca * cb)));
    CHECK(std::abs((a + b).to_complex() - (ca + cb)) < 1e-9 * (1 + std::abs(ca + cb)));
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK((b * b.inverse()).is_one());
    }
  }
}

TEST_CASE("cyclotomic errors") {
  CHECK_THROWS_AS(Cyclotomic().inverse(), ZeroInput);
  auto a = Cyclotomic::zeta_power(24, 1);
  auto b = Cyclotomic::zeta_power(12, 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a.to_rational(), InvalidArgument);
  // rationals mix freely
  CHECK((a * Cyclotomic(q(2))) == a + a);
}

TEST_CASE_TEMPLATE("roots_of_unity small cases", F, ExactField, ApproxField) {
  F f;
  auto r1 = roots_of_unity(f, 1);
  REQUIRE(r1.size() == 1);
  CHECK(f.equal(value(f, r1[0]), f.one()));
  auto r2 = roots_of_unity(f, 2);
  REQUIRE(r2.size() == 2);
  CHECK(f.equal(value(f, r2[1]), -f.one()));
  auto r4 = roots_of_unity(f, 4);
  std::vector<int> prim;
  for (auto& e : r4)
    if (e.primitive) prim.push_back(e.index);
  CHECK(prim == std::vector<int>{1, 3});
}

TEST_CASE("product of all n-th roots of unity is (-1)^(n+1)") {
  ExactField ef(24);
  ApproxField af;
  for (int n = 1; n <= 24; ++n) {
    auto sign = (n % 2) ? 1L : -1L;
    auto ap = af.one();
    for (auto& e : roots_of_unity(af, n)) ap = ap * value(af, e);
    CHECK(af.equal(ap, af.from_int(sign)));
    if (24 % n) {
      CHECK_THROWS_AS(roots_of_unity(ef, n), ConductorTooSmall);
      continue;
    }
    auto ep = ef.one();
    for (auto& e : roots_of_unity(ef, n)) {
      auto v = value(ef, e);
      CHECK(power(ef, v, n).is_one());
      ep = ep * v;
    }
    CHECK(ep == ef.from_int(sign));
  }
}

TEST_CASE("odd conductor still contains -1 and the 2L-th roots") {
  ExactField f(3);
  CHECK(f.unit_group_order() == 6);
  auto z6 = f.zeta(6, 1);
  CHECK(power(f, z6, 6).is_one());
  CHECK(!power(f, z6, 3).is_one());
  CHECK(f.zeta(2, 1) == f.from_int(-1));
}

TEST_CASE("nth_root worked examples") {
  ExactField f(24);
  CHECK(f.nth_root(f.one(), 5).is_one());
  CHECK(f.nth_root(f.from_rational(q(1, 4)), 2) == f.from_rational(q(1, 2)));

  // oracle: square every element of U_4, keep those hitting -1, take the smallest index
  std::optional<Cyclotomic> oracle;
  for (auto& e : roots_of_unity(f, 4)) {
    auto v = value(f, e);
    if (v * v == f.from_int(-1)) {
      oracle = v;
      break;
    }
  }
  REQUIRE(oracle);
  CHECK(f.nth_root(f.from_int(-1), 2) == *oracle);

  ApproxField af;
  auto ai = af.nth_root(af.from_int(-1), 2);
  CHECK(std::abs(ai.value() - std::complex<double>(0, 1)) < 1e-15);
}

TEST_CASE("nth_root errors") {
  ExactField f(24);
  CHECK_THROWS_AS(f.nth_root(f.zero(), 2), ZeroInput);
  CHECK_THROWS_AS(f.nth_root(f.from_int(2), 2), RootNotRepresentable);
  // -1 has no 5th-root-of-unity issue (odd root is -1), but zeta_24 has no cube root in Q(zeta_24)
  CHECK(f.nth_root(f.from_int(-1), 5) == f.from_int(-1));
  CHECK_THROWS_AS(f.nth_root(f.zeta(24, 1), 3), RootNotRepresentable);
  ApproxField af;
  CHECK_THROWS_AS(af.nth_root(af.zero(), 3), ZeroInput);
}

TEST_CASE("nth_root of random perfect powers") {
  ExactField f(24);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), ex(1, 6);
  int checked = 0;
  while (checked < 1000) {
    int n = ex(rng);
    int p = num(rng);
    if (p == 0) continue;
    Rational base = q(p, den(rng));
    Rational a = 1;
    for (int i = 0; i < n; ++i) a *= base;
    auto r = f.nth_root(f.from_rational(a), n);
    CHECK(power(f, r, n) == f.from_rational(a));
    ++checked;
  }
}

TEST_CASE("nth_root on roots of unity returns a root") {
  ExactField f(24);
  for (int k = 0; k < 24; ++k) {
    auto a = f.from_rational(q(9, 4)) * f.zeta(24, k);
    for (int n : {1, 2}) {
      if (n == 2 && k % 2) {
        CHECK_THROWS_AS(f.nth_root(a, n), RootNotRepresentable);
        continue;
      }
      auto r = f.nth_root(a, n);
      CHECK(power(f, r, n) == a);
    }
  }
}

TEST_CASE("element_is_root_of_unity") {
  ExactField f(24);
  CHECK(element_is_root_of_unity(f, f.from_int(-1), 24) == 2);
  CHECK(!element_is_root_of_unity(f, f.from_rational(q(1, 2)), 24));
  // oracle: iterate powers of zeta_6
  auto z6 = f.zeta(6, 1);
  int oracle = 0;
  auto p = z6;
  for (int d = 1; d <= 24; ++d, p = p * z6)
    if (p.is_one()) {
      oracle = d;
      break;
    }
  CHECK(oracle == 6);
  CHECK(element_is_root_of_unity(f, z6, 24) == oracle);
  CHECK(!element_is_root_of_unity(f, z6, 5));
  ApproxField af;
  CHECK(element_is_root_of_unity(af, af.zeta(6, 1), 24) == 6);
}

TEST_CASE("exact and approx backends agree on random expressions") {
  ExactField ef(24);
  ApproxField af;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6), op(0, 3), root(0, 23);
  for (int it = 0; it < 200; ++it) {
    Cyclotomic e = ef.from_int(1);
    Approx a = af.from_int(1);
    for (int step = 0; step < 8; ++step) {
      Cyclotomic x;
      Approx y;
      if (step % 3 == 2) {
        int k = root(rng);
        x = ef.zeta(24, k);
        y = af.zeta(24, k);
      } else {
        Rational r = q(d(rng), 1 + std::abs(d(rng)));
        x = ef.from_rational(r);
        y = af.from_rational(r);
      }
      switch (op(rng)) {
        case 0: e = e + x; a = a + y; break;
        case 1: e = e - x; a = a - y; break;
        case 2: e = e * x; a = a * y; break;
        default:
          if (!x.is_zero()) { e = e / x; a = a / y; }
      }
    }
    CHECK(af.equal(Approx(e.to_complex()), a));
  }
}

TEST_CASE("approx zero test is relative to the accumulated magnitude") {
  ApproxField af(1e-9);
  Approx big(1e15);
  Approx tiny = (big + Approx(1.0)) - big;
  CHECK(!af.is_zero(Approx(1e-300)));
  CHECK(af.is_zero(tiny - Approx(1.0)));
  CHECK_THROWS_AS(ApproxField(0.0), InvalidArgument);
}
