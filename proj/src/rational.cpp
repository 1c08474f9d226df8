#include "fps/rational.hpp"

#include <cctype>

#include "fps/errors.hpp"

namespace fps {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw ParseError("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::optional<Integer> exact_root(const Integer& a, int n) {
  if (n <= 0) return std::nullopt;
  if (a < 0 && n % 2 == 0) return std::nullopt;
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n));
  if (!exact) return std::nullopt;
  return r;
}

std::optional<Rational> exact_root(const Rational& q, int n) {
  auto num = exact_root(Integer(q.get_num()), n);
  if (!num) return std::nullopt;
  auto den = exact_root(Integer(q.get_den()), n);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace fps
