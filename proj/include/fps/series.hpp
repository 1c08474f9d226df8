#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fps/errors.hpp"
#include "fps/field.hpp"

namespace fps {

inline constexpr int kInfOrder = std::numeric_limits<int>::max();

/// Truncated power series c_0 + c_1 z + ... + c_N z^N, known modulo z^{N+1}.
template <class Field>
class Series {
 public:
  using field_type = Field;
  using Scalar = typename Field::Scalar;

  Series() : Series(Field(), 0) {}
  Series(const Field& f, int trunc) : field_(f), c_(check_trunc(trunc) + 1, f.zero()) {}
  Series(const Field& f, int trunc, std::vector<Scalar> c) : field_(f), c_(std::move(c)) {
    c_.resize(check_trunc(trunc) + 1, f.zero());
  }

  static Series monomial(const Field& f, int trunc, int k, const Scalar& coeff) {
    Series s(f, trunc);
    if (k >= 0 && k <= trunc) s.c_[k] = coeff;
    return s;
  }
  static Series monomial(const Field& f, int trunc, int k) { return monomial(f, trunc, k, f.one()); }
  static Series identity(const Field& f, int trunc) { return monomial(f, trunc, 1); }

  const Field& field() const { return field_; }
  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }
  /// Coefficient i, or zero beyond the truncation.
  Scalar coeff(int i) const { return (i >= 0 && i <= trunc()) ? c_[i] : field_.zero(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_zero(int i) const { return field_.is_zero(c_[i]); }

  /// Smallest index >= start with a nonzero coefficient, or trunc()+1.
  int first_nonzero(int start = 0) const {
    for (int i = std::max(start, 0); i <= trunc(); ++i)
      if (!field_.is_zero(c_[i])) return i;
    return trunc() + 1;
  }
  /// Valuation; kInfOrder when all known coefficients vanish.
  int ord() const {
    int i = first_nonzero();
    return i > trunc() ? kInfOrder : i;
  }
  bool is_zero_series() const { return ord() == kInfOrder; }

  Series truncated(int n) const {
    if (n >= trunc()) return *this;
    return Series(field_, n, std::vector<Scalar>(c_.begin(), c_.begin() + n + 1));
  }

 private:
  Field field_;
  std::vector<Scalar> c_;

  static int check_trunc(int n) {
    if (n < 0) throw InvalidArgument("truncation order must be >= 0");
    return n;
  }
};

namespace detail {

template <class Field>
int eff_ord(const Series<Field>& s) {
  return std::min(s.ord(), s.trunc() + 1);
}

inline int clamp_int(long v) {
  return static_cast<int>(std::min<long>(v, std::numeric_limits<int>::max() / 4));
}

}  // namespace detail

template <class Field>
void require_unit(const Series<Field>& u, const char* what) {
  if (u.trunc() < 1 || !u.is_zero(0) || u.is_zero(1))
    throw InvalidArgument(std::string(what) + " must be a unit series (c_0 = 0, c_1 != 0)");
}

template <class Field>
void require_gamma(const Series<Field>& a, const char* what) {
  int o = a.ord();
  if (o == kInfOrder || o < 2)
    throw InvalidArgument(std::string(what) + " must have order >= 2 within the truncation");
}

/// Series with ord = 1; validated on construction.
template <class Field>
class UnitSeries {
 public:
  explicit UnitSeries(Series<Field> s) : s_(std::move(s)) { require_unit(s_, "UnitSeries"); }
  const Series<Field>& series() const { return s_; }
  operator const Series<Field>&() const { return s_; }  // NOLINT

 private:
  Series<Field> s_;
};

/// Series with c_0 = 0 and 2 <= ord <= N; validated on construction.
template <class Field>
class GammaSeries {
 public:
  explicit GammaSeries(Series<Field> s) : s_(std::move(s)) { require_gamma(s_, "GammaSeries"); }
  const Series<Field>& series() const { return s_; }
  int order() const { return s_.ord(); }
  operator const Series<Field>&() const { return s_; }  // NOLINT

 private:
  Series<Field> s_;
};

template <class Field>
Series<Field> operator+(const Series<Field>& a, const Series<Field>& b) {
  a.field().check_same(b.field());
  int n = std::min(a.trunc(), b.trunc());
  Series<Field> r(a.field(), n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class Field>
Series<Field> operator-(const Series<Field>& a) {
  Series<Field> r(a.field(), a.trunc());
  for (int i = 0; i <= a.trunc(); ++i) r[i] = -a[i];
  return r;
}

template <class Field>
Series<Field> operator-(const Series<Field>& a, const Series<Field>& b) {
  return a + (-b);
}

template <class Field>
Series<Field> operator*(const typename Field::Scalar& c, const Series<Field>& a) {
  Series<Field> r(a.field(), a.trunc());
  for (int i = 0; i <= a.trunc(); ++i)
    if (!a.field().structural_zero(a[i])) r[i] = c * a[i];
  return r;
}

/// Ring product truncated to `cap` (or the known precision, whichever is smaller).
template <class Field>
Series<Field> mul(const Series<Field>& a, const Series<Field>& b, int cap) {
  a.field().check_same(b.field());
  const auto& f = a.field();
  int oa = detail::eff_ord(a), ob = detail::eff_ord(b);
  int n = std::min({a.trunc() + ob, b.trunc() + oa, cap});
  Series<Field> r(f, n);
  for (int i = oa; i <= std::min(a.trunc(), n); ++i) {
    if (f.structural_zero(a[i])) continue;
    for (int j = ob; j <= std::min(b.trunc(), n - i); ++j) {
      if (f.structural_zero(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

template <class Field>
Series<Field> operator*(const Series<Field>& a, const Series<Field>& b) {
  return mul(a, b, std::max(a.trunc(), b.trunc()));
}

/// z^r · S.
template <class Field>
Series<Field> times_monomial(const Series<Field>& s, int r) {
  Series<Field> out(s.field(), s.trunc() + r);
  for (int i = 0; i <= s.trunc(); ++i) out[i + r] = s[i];
  return out;
}

/// S / z^r; the first r coefficients must vanish.
template <class Field>
Series<Field> divide_monomial(const Series<Field>& s, int r) {
  if (s.first_nonzero() < r) throw InvalidArgument("series is not divisible by z^" + std::to_string(r));
  if (r > s.trunc()) throw InvalidArgument("division by z^r exhausts the truncation");
  Series<Field> out(s.field(), s.trunc() - r);
  for (int i = r; i <= s.trunc(); ++i) out[i - r] = s[i];
  return out;
}

/// S(z^m).
template <class Field>
Series<Field> substitute_power(const Series<Field>& s, int m) {
  if (m < 1) throw InvalidArgument("substitute_power needs m >= 1");
  Series<Field> out(s.field(), detail::clamp_int(static_cast<long>(m) * (s.trunc() + 1) - 1));
  for (int i = 0; i <= s.trunc(); ++i) out[i * m] = s[i];
  return out;
}

/// S(c z).
template <class Field>
Series<Field> scale_argument(const Series<Field>& s, const typename Field::Scalar& c) {
  Series<Field> out(s.field(), s.trunc());
  auto p = s.field().one();
  for (int i = 0; i <= s.trunc(); ++i) {
    if (!s.field().structural_zero(s[i])) out[i] = s[i] * p;
    if (i < s.trunc()) p = p * c;
  }
  return out;
}

/// S^m as a ring power, i.e. z^m ∘ S, with its full known precision.
template <class Field>
Series<Field> pow(const Series<Field>& s, int m) {
  if (m < 0) throw InvalidArgument("negative power");
  if (m == 0) return Series<Field>::monomial(s.field(), s.trunc(), 0);
  int k = detail::eff_ord(s);
  int cap = detail::clamp_int(s.trunc() + static_cast<long>(m - 1) * k);
  Series<Field> r = s;
  for (int i = 1; i < m; ++i) r = mul(r, s, cap);
  return r;
}

/// A ∘ B. The result is known up to the precision the inputs determine:
/// unknown coefficients of A beyond N_A enter at index k(N_A+1), those of B
/// at index k(a_1-1) + N_B + 1, where k = ord B and a_1 the first nonzero
/// index of A past 0.
template <class Field>
Series<Field> compose(const Series<Field>& a, const Series<Field>& b) {
  a.field().check_same(b.field());
  const auto& f = a.field();
  if (b.trunc() >= 0 && !b.is_zero_series() && b.ord() == 0)
    throw CompositionUndefined("composition A∘B needs ord B >= 1");
  long k = detail::eff_ord(b);
  long a1 = a.first_nonzero(1);
  long n = std::min({k * (a.trunc() + 1) - 1, k * (a1 - 1) + b.trunc(),
                     static_cast<long>(std::max(a.trunc(), b.trunc()))});
  int N = detail::clamp_int(n);
  Series<Field> r(f, N);
  r[0] = a[0];
  if (k > N) return r;
  Series<Field> p = b.truncated(N);
  p[0] = f.zero();
  for (int i = 1; i <= a.trunc() && i * k <= N; ++i) {
    if (i > 1) p = mul(p, b, N);
    if (f.structural_zero(a[i])) continue;
    for (int j = static_cast<int>(i * k); j <= p.trunc(); ++j)
      if (!f.structural_zero(p[j])) r[j] += a[i] * p[j];
  }
  return r;
}

template <class Field>
Series<Field> iterate(const Series<Field>& a, int l) {
  if (l < 1) throw InvalidArgument("iterate needs l >= 1");
  if (a.ord() < 1) throw CompositionUndefined("iterate needs ord A >= 1");
  Series<Field> r = a;
  for (int i = 1; i < l; ++i) r = compose(r, a);
  return r;
}

/// Coefficientwise comparison over the common known range.
template <class Field>
std::optional<int> first_difference(const Series<Field>& a, const Series<Field>& b) {
  a.field().check_same(b.field());
  int n = std::min(a.trunc(), b.trunc());
  for (int i = 0; i <= n; ++i)
    if (!a.field().equal(a[i], b[i])) return i;
  return std::nullopt;
}

template <class Field>
bool congruent(const Series<Field>& a, const Series<Field>& b) {
  return !first_difference(a, b).has_value();
}

template <class Field>
bool is_identity(const Series<Field>& s) {
  return congruent(s, Series<Field>::identity(s.field(), s.trunc()));
}

/// n-th root of a series with nonzero constant term; the constant term uses
/// the field's canonical branch.
template <class Field>
Series<Field> series_nth_root(const Series<Field>& u, int n) {
  const auto& f = u.field();
  if (u.is_zero(0)) throw InvalidArgument("series_nth_root needs a nonzero constant term");
  if (n < 1) throw InvalidArgument("root exponent must be >= 1");
  Series<Field> v(f, u.trunc());
  v[0] = f.nth_root(u[0], n);
  if (n == 1) return u;
  auto denom0 = f.from_int(n) * u[0];
  for (int k = 1; k <= u.trunc(); ++k) {
    auto acc = f.zero();
    for (int i = 1; i <= k; ++i) {
      if (f.structural_zero(u[i])) continue;
      long w = static_cast<long>(n + 1) * i - static_cast<long>(n) * k;
      if (w == 0) continue;
      acc += f.from_int(w) * u[i] * v[k - i];
    }
    v[k] = acc / (f.from_int(k) * denom0);
  }
  return v;
}

/// Compositional inverse of a unit series.
template <class Field>
Series<Field> invert_unit(const Series<Field>& u);

template <class Field>
struct SymmetricSplit {
  int r = 0;
  Series<Field> R;
};

/// μ = z^r R(z^m) with r = ord μ mod m, or the first index breaking the
/// support condition.
template <class Field>
struct SplitOutcome {
  std::optional<SymmetricSplit<Field>> split;
  int offending_index = -1;
  explicit operator bool() const { return split.has_value(); }
};

template <class Field>
SplitOutcome<Field> split_symmetric(const Series<Field>& mu, int m) {
  if (m < 1) throw InvalidArgument("split_symmetric needs m >= 1");
  int o = mu.ord();
  if (o == kInfOrder) throw InvalidArgument("split_symmetric of the zero series");
  int r = o % m;
  for (int i = o + 1; i <= mu.trunc(); ++i)
    if (i % m != r && !mu.is_zero(i)) return {std::nullopt, i};
  int n = (mu.trunc() - r) / m;
  Series<Field> R(mu.field(), n);
  for (int j = 0; j <= n; ++j) R[j] = mu[r + j * m];
  return {SymmetricSplit<Field>{r, std::move(R)}, -1};
}

/// z^r R(z)^n, the mate with z^n ∘ z^r R(z^n) = z^r R^n(z) ∘ z^n.
template <class Field>
Series<Field> symmetric_mate(const Series<Field>& R, int r, int n) {
  if (r < 0 || n < 1) throw InvalidArgument("symmetric_mate needs r >= 0, n >= 1");
  return times_monomial(pow(R, n), r);
}

/// z^r R(z^m).
template <class Field>
Series<Field> assemble_symmetric(const Series<Field>& R, int r, int m) {
  return times_monomial(substitute_power(R, m), r);
}

/// Exact series mapped into the approximate backend.
inline Series<ApproxField> to_approx(const Series<ExactField>& s, const ApproxField& f) {
  Series<ApproxField> out(f, s.trunc());
  for (int i = 0; i <= s.trunc(); ++i) out[i] = Approx(s[i].to_complex());
  return out;
}

}  // namespace fps

#include "fps/detail/power_table.hpp"

namespace fps {

template <class Field>
Series<Field> invert_unit(const Series<Field>& u) {
  require_unit(u, "invert_unit argument");
  const auto& f = u.field();
  const int N = u.trunc();
  detail::PowerTable<Field> w(f, N, N);
  auto inv1 = f.one() / u[1];
  w.push(inv1);
  for (int t = 2; t <= N; ++t) {
    auto e = f.zero();
    for (int i = 2; i <= t; ++i)
      if (!f.structural_zero(u[i])) e += u[i] * w.at(i, t);
    w.push(-e * inv1);
  }
  return w.series();
}

}  // namespace fps
