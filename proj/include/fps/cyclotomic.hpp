#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "fps/rational.hpp"

namespace fps {

namespace detail {

/// Immutable per-conductor data: Φ_L and the reductions x^k mod Φ_L.
/// Interned for the lifetime of the process.
struct CycloTables {
  int conductor = 1;
  int phi = 1;
  std::vector<Integer> cyclotomic_poly;             // monic, degree phi
  std::vector<std::vector<Rational>> high_powers;   // x^k mod Φ_L, k in [phi, 2phi-2]
  std::vector<std::vector<Rational>> zeta_powers;   // x^k mod Φ_L, k in [0, L)
};

const CycloTables& cyclo_tables(int conductor);

}  // namespace detail

int euler_phi(int n);

/// Element of Q(ζ_L) in the power basis 1, ζ, ..., ζ^{φ(L)-1}.
///
/// Rationals are stored inline; irrational values keep trimmed coordinates.
/// Rationals need not carry a field; any
/// irrational element does, and combining elements of different conductors
/// throws FieldMismatch.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(const Rational& q);
  explicit Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

  static Cyclotomic from_power_basis(int conductor, std::vector<Rational> coords);
  /// ζ_L^k for any integer k.
  static Cyclotomic zeta_power(int conductor, long k);

  /// 0 when no field is attached (the value is then rational).
  int conductor() const { return tables_ ? tables_->conductor : 0; }
  bool is_zero() const { return irr_.empty() && sgn(q_) == 0; }
  bool is_rational() const { return irr_.empty(); }
  bool is_one() const;
  /// Throws InvalidArgument unless is_rational().
  Rational to_rational() const;
  /// Trimmed coordinates (empty for zero).
  std::vector<Rational> coords() const;
  /// Coordinates padded to length phi.
  std::vector<Rational> power_basis(int phi) const;
  std::complex<double> to_complex() const;

  Cyclotomic inverse() const;
  Cyclotomic operator-() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  const detail::CycloTables* tables_ = nullptr;
  Rational q_;                 // the value when irr_ is empty
  std::vector<Rational> irr_;  // trimmed coordinates, size >= 2, else empty

  void set_coords(std::vector<Rational> c);
  const detail::CycloTables* joint_tables(const Cyclotomic& o) const;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

}  // namespace fps
