#include "fps/field.hpp"

namespace fps {

namespace {

// ζ_{L'}^k with L' = lcm(2, L), expressed in the power basis of Q(ζ_L)
Cyclotomic unit_power(int L, long k) {
  if (L % 2 == 0) return Cyclotomic::zeta_power(L, k);
  long Lp = 2L * L;
  k = ((k % Lp) + Lp) % Lp;
  Cyclotomic w = Cyclotomic::zeta_power(L, k * ((L + 1) / 2));
  return (k % 2) ? -w : w;
}

}  // namespace

Cyclotomic ExactField::zeta(int order, long index) const {
  require_roots(order);
  long Lp = unit_group_order();
  long k = ((index % order) + order) % order;
  return unit_power(conductor, k * (Lp / order));
}

Cyclotomic ExactField::nth_root(const Cyclotomic& a, int n) const {
  if (n < 1) throw InvalidArgument("root exponent must be >= 1");
  if (a.is_zero()) throw ZeroInput("n-th root of zero");
  if (n == 1) return a;
  if (a.conductor() != 0 && a.conductor() != conductor)
    throw FieldMismatch("element of conductor " + std::to_string(a.conductor()) +
                        " used in field of conductor " + std::to_string(conductor));
  const int Lp = unit_group_order();

  // a = q * ζ_{L'}^k with q > 0 rational
  int k = -1;
  Rational q;
  if (a.is_rational()) {
    q = a.to_rational();
    k = sgn(q) > 0 ? 0 : Lp / 2;
    q = abs(q);
  } else {
    const Cyclotomic step = unit_power(conductor, -1);
    Cyclotomic t = a;
    for (int i = 0; i < Lp; ++i) {
      if (t.is_rational() && sgn(t.to_rational()) > 0) {
        k = i;
        q = t.to_rational();
        break;
      }
      t = t * step;
    }
  }
  if (k < 0)
    throw RootNotRepresentable("element is not a rational multiple of a root of unity; its " +
                               std::to_string(n) + "-th root is not computed in Q(zeta_" +
                               std::to_string(conductor) + ")");
  auto r = exact_root(q, n);
  if (!r)
    throw RootNotRepresentable("rational " + q.get_str() + " has no rational " +
                               std::to_string(n) + "-th root");
  for (int j = 0; j < Lp; ++j)
    if ((static_cast<long>(j) * n - k) % Lp == 0) return Cyclotomic(*r) * unit_power(conductor, j);
  throw RootNotRepresentable("root of unity zeta_" + std::to_string(Lp) + "^" + std::to_string(k) +
                             " has no " + std::to_string(n) + "-th root in Q(zeta_" +
                             std::to_string(conductor) + ")");
}

}  // namespace fps
