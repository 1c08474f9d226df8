#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "fps/cyclotomic.hpp"
#include "fps/errors.hpp"
#include "fps/rational.hpp"

namespace fps {

/// Complex double with a running bound on the magnitude of the terms that
/// produced it; rounding error is proportional to mag, not to |v|.
class Approx {
 public:
  Approx() = default;
  Approx(std::complex<double> v) : v_(v), mag_(std::abs(v)) {}  // NOLINT
  Approx(std::complex<double> v, double mag) : v_(v), mag_(std::max(mag, std::abs(v))) {}

  std::complex<double> value() const { return v_; }
  double mag() const { return mag_; }

  Approx operator-() const { return {-v_, mag_}; }
  friend Approx operator+(const Approx& a, const Approx& b) { return {a.v_ + b.v_, a.mag_ + b.mag_}; }
  friend Approx operator-(const Approx& a, const Approx& b) { return {a.v_ - b.v_, a.mag_ + b.mag_}; }
  /// First-order bound: mag_a mag_b less the second-order (mag_a - |a|)(mag_b - |b|).
  friend Approx operator*(const Approx& a, const Approx& b) {
    double x = std::abs(a.v_), y = std::abs(b.v_);
    return {a.v_ * b.v_, x * b.mag_ + a.mag_ * y - x * y};
  }
  friend Approx operator/(const Approx& a, const Approx& b) {
    if (b.v_ == 0.0) throw ZeroInput("division by zero");
    std::complex<double> q = a.v_ / b.v_;
    double nb = std::abs(b.v_);
    return {q, (a.mag_ + std::abs(q) * b.mag_) / nb};
  }
  Approx& operator+=(const Approx& o) { return *this = *this + o; }
  Approx& operator-=(const Approx& o) { return *this = *this - o; }
  Approx& operator*=(const Approx& o) { return *this = *this * o; }
  Approx& operator/=(const Approx& o) { return *this = *this / o; }

 private:
  std::complex<double> v_{0.0, 0.0};
  double mag_ = 0.0;
};

/// Exact backend: Q(ζ_L). Roots of unity of order n are available when
/// n | lcm(2, L).
struct ExactField {
  using Scalar = Cyclotomic;
  static constexpr bool is_exact = true;

  int conductor = 24;

  ExactField() = default;
  explicit ExactField(int L) : conductor(L) {
    if (L < 1) throw InvalidArgument("conductor must be >= 1");
  }

  /// Order of the group of roots of unity contained in the field.
  int unit_group_order() const { return std::lcm(2, conductor); }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1L); }
  Scalar from_rational(const Rational& q) const { return Scalar(q); }
  Scalar from_int(long v) const { return Scalar(v); }

  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  bool structural_zero(const Scalar& a) const { return a.is_zero(); }

  void require_roots(int order) const {
    if (order < 1 || unit_group_order() % order != 0)
      throw ConductorTooSmall(order, conductor);
  }
  /// e^{2πi index/order}.
  Scalar zeta(int order, long index) const;
  /// Canonical n-th root (see nth_root in the field interface).
  Scalar nth_root(const Scalar& a, int n) const;
  std::complex<double> to_complex(const Scalar& a) const { return a.to_complex(); }
  double magnitude(const Scalar& a) const { return std::abs(a.to_complex()); }

  friend bool operator==(const ExactField& a, const ExactField& b) {
    return a.conductor == b.conductor;
  }
  void check_same(const ExactField& o) const {
    if (!(*this == o))
      throw FieldMismatch("series over conductors " + std::to_string(conductor) + " and " +
                          std::to_string(o.conductor) + " combined");
  }
};

/// Approximate backend: complex doubles with relative zero-test tolerance.
struct ApproxField {
  using Scalar = Approx;
  static constexpr bool is_exact = false;

  double tol = 1e-9;

  ApproxField() = default;
  explicit ApproxField(double t) : tol(t) {
    if (!(t > 0)) throw InvalidArgument("tolerance must be positive");
  }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1.0); }
  Scalar from_rational(const Rational& q) const { return Scalar(q.get_d()); }
  Scalar from_int(long v) const { return Scalar(static_cast<double>(v)); }
  Scalar from_complex(std::complex<double> v) const { return Scalar(v); }

  bool is_zero(const Scalar& a) const { return std::abs(a.value()) <= tol * a.mag(); }
  bool equal(const Scalar& a, const Scalar& b) const { return is_zero(a - b); }
  bool structural_zero(const Scalar& a) const { return a.mag() == 0.0; }

  void require_roots(int order) const {
    if (order < 1) throw InvalidArgument("root of unity order must be >= 1");
  }
  Scalar zeta(int order, long index) const {
    require_roots(order);
    long j = ((index % order) + order) % order;
    if (j == 0) return one();
    if (2 * j == order) return Scalar(-1.0);
    if (4 * j == order) return Scalar(std::complex<double>(0, 1));
    if (4 * j == 3 * order) return Scalar(std::complex<double>(0, -1));
    double th = 2.0 * std::numbers::pi * static_cast<double>(j) / order;
    return Scalar(std::polar(1.0, th));
  }
  /// Principal root, argument in (-π/n, π/n].
  Scalar nth_root(const Scalar& a, int n) const {
    if (n < 1) throw InvalidArgument("root exponent must be >= 1");
    if (a.value() == 0.0) throw ZeroInput("n-th root of zero");
    if (n == 1) return a;
    std::complex<double> v = a.value();
    std::complex<double> r;
    if (v.imag() == 0.0 && v.real() > 0) r = std::pow(v.real(), 1.0 / n);
    else r = std::pow(v, 1.0 / n);
    double rel = a.mag() / std::abs(v);
    return Scalar(r, std::abs(r) * std::max(1.0, rel / n));
  }
  std::complex<double> to_complex(const Scalar& a) const { return a.value(); }
  double magnitude(const Scalar& a) const { return std::abs(a.value()); }

  friend bool operator==(const ApproxField& a, const ApproxField& b) { return a.tol == b.tol; }
  void check_same(const ApproxField&) const {}
};

struct RootOfUnity {
  int order = 1;
  int index = 0;
  bool primitive = true;
};

/// All n-th roots of unity, sorted by index.
template <class Field>
std::vector<RootOfUnity> roots_of_unity(const Field& f, int n) {
  f.require_roots(n);
  std::vector<RootOfUnity> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) out.push_back({n, j, std::gcd(j, n) == 1});
  return out;
}

template <class Field>
typename Field::Scalar value(const Field& f, const RootOfUnity& e) {
  return f.zeta(e.order, e.index);
}

template <class Field>
typename Field::Scalar power(const Field& f, typename Field::Scalar a, long e) {
  using S = typename Field::Scalar;
  if (e < 0) {
    a = f.one() / a;
    e = -e;
  }
  S r = f.one();
  while (e > 0) {
    if (e & 1) r = r * a;
    e >>= 1;
    if (e) a = a * a;
  }
  return r;
}

template <class Field>
typename Field::Scalar nth_root(const Field& f, const typename Field::Scalar& a, int n) {
  return f.nth_root(a, n);
}

/// Smallest d <= max_order with a^d = 1.
template <class Field>
std::optional<int> element_is_root_of_unity(const Field& f, const typename Field::Scalar& a,
                                            int max_order) {
  if (f.is_zero(a)) return std::nullopt;
  double m = f.magnitude(a);
  if (std::abs(m - 1.0) > 1e-6) return std::nullopt;
  auto p = a;
  for (int d = 1; d <= max_order; ++d) {
    if (f.equal(p, f.one())) return d;
    p = p * a;
  }
  return std::nullopt;
}

inline Approx to_approx(const ApproxField&, const Cyclotomic& a) { return Approx(a.to_complex()); }

}  // namespace fps
