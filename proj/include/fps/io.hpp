#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fps/field.hpp"
#include "fps/series.hpp"

namespace fps::io {

using json = nlohmann::json;

json field_to_json(const ExactField& f);
json field_to_json(const ApproxField& f);

/// Exact scalars: "p/q" when rational, else the φ(L) power-basis coordinates
/// as strings. Approximate scalars: [re, im].
json scalar_to_json(const ExactField& f, const Cyclotomic& a);
json scalar_to_json(const ApproxField& f, const Approx& a);
Cyclotomic scalar_from_json(const ExactField& f, const json& j);
Approx scalar_from_json(const ApproxField& f, const json& j);

/// Throws ParseError when the JSON field disagrees with f.
void check_field(const ExactField& f, const json& j);
void check_field(const ApproxField& f, const json& j);

template <class Field>
json to_json(const Series<Field>& s) {
  json c = json::array();
  for (const auto& a : s.coeffs()) c.push_back(scalar_to_json(s.field(), a));
  return {{"trunc", s.trunc()}, {"field", field_to_json(s.field())}, {"coeffs", std::move(c)}};
}

/// Without "trunc", N = default_trunc, or the coefficient count when that is negative.
template <class Field>
Series<Field> series_from_json(const Field& f, const json& j, int default_trunc = -1) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("series JSON needs an object with a \"coeffs\" array");
  if (j.contains("field")) check_field(f, j["field"]);
  const auto& c = j["coeffs"];
  int N = j.contains("trunc")  ? j["trunc"].get<int>()
          : default_trunc >= 0 ? default_trunc
                               : static_cast<int>(c.size()) - 1;
  if (N < 0) throw ParseError("negative truncation");
  if (static_cast<int>(c.size()) > N + 1)
    throw ParseError("more coefficients than trunc + 1");
  Series<Field> s(f, N);
  for (std::size_t i = 0; i < c.size(); ++i) {
    try {
      s[static_cast<int>(i)] = scalar_from_json(f, c[i]);
    } catch (const ParseError& e) {
      throw ParseError("coefficient " + std::to_string(i) + ": " + e.what());
    }
  }
  return s;
}

/// Parses "z^2 + 3*z^5 - 1/2*z^7" into (exponent, coefficient) terms.
/// Errors name the character offset.
std::vector<std::pair<int, Rational>> parse_terms(std::string_view text);

template <class Field>
Series<Field> parse_series(const Field& f, std::string_view text, int N) {
  Series<Field> s(f, N);
  for (const auto& [k, c] : parse_terms(text))
    if (k <= N) s[k] = s[k] + f.from_rational(c);
  return s;
}

/// Parses either a series JSON object or the text form.
template <class Field>
Series<Field> read_series(const Field& f, std::string_view text, int N) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string_view::npos && text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("malformed series JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return series_from_json(f, j, N);
  }
  return parse_series(f, text, N);
}

std::string scalar_text(const Cyclotomic& a);
std::string scalar_text(const Approx& a);

/// "z^2 + 3*z^5 - z^7 + O(z^33)".
template <class Field>
std::string pretty(const Series<Field>& s) {
  std::string out;
  for (int k = 0; k <= s.trunc(); ++k) {
    if (s.field().structural_zero(s[k]) || s.is_zero(k)) continue;
    std::string c = scalar_text(s[k]);
    bool neg = c.size() > 1 && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (mono.empty()) out += c;
    else if (c == "1") out += mono;
    else out += c + "*" + mono;
  }
  if (out.empty()) out = "0";
  return out + " + O(z^" + std::to_string(s.trunc() + 1) + ")";
}

}  // namespace fps::io
