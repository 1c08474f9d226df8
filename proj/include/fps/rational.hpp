#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fps {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (canonicalised). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Exact n-th root of a rational, if one exists. Negative inputs have a
/// rational root only for odd n.
std::optional<Rational> exact_root(const Rational& q, int n);

std::optional<Integer> exact_root(const Integer& a, int n);

}  // namespace fps
