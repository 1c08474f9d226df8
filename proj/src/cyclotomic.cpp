#include "fps/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>

#include "fps/errors.hpp"

namespace fps {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

namespace {

using Poly = std::vector<Integer>;

// exact division of integer polynomials by a monic divisor
Poly divide_monic(const Poly& num, const Poly& den) {
  Poly rem = num;
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  Poly quo(nn - dn + 1);
  for (int k = nn - dn; k >= 0; --k) {
    Integer c = rem[k + dn];
    quo[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) rem[k + j] -= c * den[j];
  }
  return quo;
}

Poly cyclotomic_polynomial(int n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

std::unique_ptr<CycloTables> build_tables(int L) {
  auto t = std::make_unique<CycloTables>();
  t->conductor = L;
  t->phi = euler_phi(L);
  t->cyclotomic_poly = cyclotomic_polynomial(L);
  const int phi = t->phi;
  int top = std::max(2 * phi - 2, L - 1);

  // x^k mod Φ_L by repeated multiplication by x
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  if (phi == 1) cur[0] = 1;
  for (int k = 0; k <= top; ++k) {
    rows.push_back(cur);
    // cur *= x
    Rational carry = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (sgn(carry) != 0)
      for (int j = 0; j < phi; ++j) cur[j] -= carry * Rational(t->cyclotomic_poly[j]);
  }
  for (int k = phi; k <= 2 * phi - 2; ++k) t->high_powers.push_back(rows[k]);
  for (int k = 0; k < L; ++k) t->zeta_powers.push_back(rows[k]);
  return t;
}

}  // namespace

const CycloTables& cyclo_tables(int conductor) {
  if (conductor < 1) throw InvalidArgument("conductor must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloTables>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(conductor);
  if (it == registry.end()) it = registry.emplace(conductor, build_tables(conductor)).first;
  return *it->second;
}

}  // namespace detail

Cyclotomic::Cyclotomic(const Rational& q) : q_(q) {}

Cyclotomic Cyclotomic::from_power_basis(int conductor, std::vector<Rational> coords) {
  Cyclotomic r;
  r.tables_ = &detail::cyclo_tables(conductor);
  if (static_cast<int>(coords.size()) > r.tables_->phi)
    throw InvalidArgument("too many power-basis coordinates for conductor " +
                          std::to_string(conductor));
  r.set_coords(std::move(coords));
  return r;
}

Cyclotomic Cyclotomic::zeta_power(int conductor, long k) {
  const auto& t = detail::cyclo_tables(conductor);
  long idx = ((k % conductor) + conductor) % conductor;
  return from_power_basis(conductor, t.zeta_powers[idx]);
}

void Cyclotomic::set_coords(std::vector<Rational> c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) {
    q_ = c.empty() ? Rational(0) : c[0];
    irr_.clear();
  } else {
    q_ = 0;
    irr_ = std::move(c);
  }
}

std::vector<Rational> Cyclotomic::coords() const {
  if (!irr_.empty()) return irr_;
  if (sgn(q_) == 0) return {};
  return {q_};
}

bool Cyclotomic::is_one() const { return irr_.empty() && q_ == 1; }

Rational Cyclotomic::to_rational() const {
  if (!irr_.empty()) throw InvalidArgument("cyclotomic element is not rational");
  return q_;
}

std::vector<Rational> Cyclotomic::power_basis(int phi) const {
  std::vector<Rational> out(phi);
  if (irr_.empty()) {
    if (phi > 0) out[0] = q_;
  } else {
    for (std::size_t i = 0; i < irr_.size() && static_cast<int>(i) < phi; ++i) out[i] = irr_[i];
  }
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  if (irr_.empty()) return {q_.get_d(), 0.0};
  const double L = tables_->conductor;
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < irr_.size(); ++k) {
    if (sgn(irr_[k]) == 0) continue;
    double th = 2.0 * std::numbers::pi * static_cast<double>(k) / L;
    acc += irr_[k].get_d() * std::complex<double>(std::cos(th), std::sin(th));
  }
  return acc;
}

const detail::CycloTables* Cyclotomic::joint_tables(const Cyclotomic& o) const {
  if (tables_ && o.tables_ && tables_ != o.tables_)
    throw FieldMismatch("cyclotomic elements of conductors " + std::to_string(conductor()) +
                        " and " + std::to_string(o.conductor()) + " combined");
  return tables_ ? tables_ : o.tables_;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  r.q_ = -r.q_;
  for (auto& c : r.irr_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  tables_ = joint_tables(o);
  if (irr_.empty() && o.irr_.empty()) {
    q_ += o.q_;
    return *this;
  }
  std::vector<Rational> c = power_basis(tables_->phi);
  auto oc = o.power_basis(tables_->phi);
  for (int i = 0; i < tables_->phi; ++i) c[i] += oc[i];
  set_coords(std::move(c));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r;
  r.tables_ = a.joint_tables(b);
  if (a.irr_.empty() && b.irr_.empty()) {
    r.q_ = a.q_ * b.q_;
    return r;
  }
  if (a.irr_.empty() || b.irr_.empty()) {
    const Rational& s = a.irr_.empty() ? a.q_ : b.q_;
    const auto& v = a.irr_.empty() ? b.irr_ : a.irr_;
    if (sgn(s) == 0) return r;
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    r.set_coords(std::move(c));
    return r;
  }
  const auto& t = *r.tables_;
  std::vector<Rational> prod(a.irr_.size() + b.irr_.size() - 1);
  for (std::size_t i = 0; i < a.irr_.size(); ++i) {
    if (sgn(a.irr_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.irr_.size(); ++j) {
      if (sgn(b.irr_[j]) == 0) continue;
      prod[i + j] += a.irr_[i] * b.irr_[j];
    }
  }
  for (int k = static_cast<int>(prod.size()) - 1; k >= t.phi; --k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& row = t.high_powers[k - t.phi];
    for (int l = 0; l < t.phi; ++l)
      if (sgn(row[l]) != 0) prod[l] += prod[k] * row[l];
  }
  if (static_cast<int>(prod.size()) > t.phi) prod.resize(t.phi);
  r.set_coords(std::move(prod));
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ZeroInput("inverse of zero");
  if (irr_.empty()) {
    Cyclotomic r = *this;
    r.q_ = 1 / q_;
    return r;
  }
  // solve M v = e_0 where column j of M is this * x^j
  const auto& t = *tables_;
  const int phi = t.phi;
  std::vector<std::vector<Rational>> M(phi, std::vector<Rational>(phi + 1));
  Cyclotomic col = *this;
  const Cyclotomic x = zeta_power(t.conductor, 1);
  for (int j = 0; j < phi; ++j) {
    auto c = col.power_basis(phi);
    for (int i = 0; i < phi; ++i) M[i][j] = c[i];
    col = col * x;
  }
  M[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (piv < phi && sgn(M[piv][c]) == 0) ++piv;
    if (piv == phi) throw InvariantViolation("singular multiplication matrix in Q(zeta)");
    std::swap(M[piv], M[c]);
    Rational inv = 1 / M[c][c];
    for (int j = c; j <= phi; ++j) M[c][j] *= inv;
    for (int i = 0; i < phi; ++i) {
      if (i == c || sgn(M[i][c]) == 0) continue;
      Rational f = M[i][c];
      for (int j = c; j <= phi; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<Rational> v(phi);
  for (int i = 0; i < phi; ++i) v[i] = M[i][phi];
  Cyclotomic r;
  r.tables_ = tables_;
  r.set_coords(std::move(v));
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.irr_.empty() && b.irr_.empty()) return a.q_ == b.q_;
  a.joint_tables(b);
  return a.irr_ == b.irr_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) {
  if (a.is_rational()) return os << a.to_rational().get_str();
  auto c = a.coords();
  bool first = true;
  os << '(';
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    if (!first) os << (sgn(c[k]) > 0 ? " + " : " - ");
    else if (sgn(c[k]) < 0) os << '-';
    Rational m = abs(c[k]);
    bool unit = (m == 1) && k > 0;
    if (!unit) os << m.get_str();
    if (k > 0) os << (unit ? "" : "*") << "w" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os << ')';
}

}  // namespace fps
