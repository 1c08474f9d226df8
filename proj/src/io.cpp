#include "fps/io.hpp"

#include <cctype>
#include <sstream>

namespace fps::io {

json field_to_json(const ExactField& f) { return {{"kind", "exact"}, {"conductor", f.conductor}}; }

json field_to_json(const ApproxField& f) { return {{"kind", "approx"}, {"tol", f.tol}}; }

void check_field(const ExactField& f, const json& j) {
  if (!j.is_object() || j.value("kind", "") != "exact")
    throw ParseError("series JSON is not over the exact field");
  if (j.contains("conductor") && j["conductor"].get<int>() != f.conductor)
    throw ParseError("series JSON has conductor " + std::to_string(j["conductor"].get<int>()) +
                     ", expected " + std::to_string(f.conductor));
}

void check_field(const ApproxField&, const json& j) {
  if (!j.is_object() || j.value("kind", "") != "approx")
    throw ParseError("series JSON is not over the approximate field");
}

json scalar_to_json(const ExactField& f, const Cyclotomic& a) {
  if (a.is_rational()) return to_string(a.to_rational());
  json arr = json::array();
  for (const auto& c : a.power_basis(euler_phi(f.conductor))) arr.push_back(to_string(c));
  return arr;
}

json scalar_to_json(const ApproxField&, const Approx& a) {
  return json::array({a.value().real(), a.value().imag()});
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

}  // namespace

Cyclotomic scalar_from_json(const ExactField& f, const json& j) {
  if (!j.is_array()) return Cyclotomic(rational_from_json(j));
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  if (static_cast<int>(coords.size()) > euler_phi(f.conductor))
    throw ParseError("more than φ(L) power-basis coordinates");
  return Cyclotomic::from_power_basis(f.conductor, std::move(coords));
}

Approx scalar_from_json(const ApproxField&, const json& j) {
  if (j.is_number()) return Approx(j.get<double>());
  if (j.is_string()) return Approx(parse_rational(j.get<std::string>()).get_d());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Approx(std::complex<double>(j[0].get<double>(), j[1].get<double>()));
  throw ParseError("expected a number or [re, im], got " + j.dump());
}

std::string scalar_text(const Cyclotomic& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string scalar_text(const Approx& a) {
  std::ostringstream os;
  os.precision(12);
  auto v = a.value();
  if (v.imag() == 0.0) os << v.real();
  else os << '(' << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i)";
  return os.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  std::vector<std::pair<int, Rational>> run() {
    std::vector<std::pair<int, Rational>> out;
    skip();
    if (at_end()) fail("empty series text");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out.push_back(term(sign));
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[i_]; }
  char get() { return s_[i_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i_));
  }

  std::string digits() {
    std::size_t b = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (b == i_) fail("expected digits");
    return std::string(s_.substr(b, i_ - b));
  }

  std::pair<int, Rational> term(int sign) {
    Rational c = sign;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      if (peek() == '/') {
        get();
        skip();
        num += "/" + digits();
      }
      c *= parse_rational(num);
      has_coeff = true;
      skip();
      if (peek() == '*') {
        get();
        skip();
        if (peek() != 'z') fail("expected 'z' after '*'");
      }
    }
    int k = 0;
    if (peek() == 'z') {
      get();
      skip();
      k = 1;
      if (peek() == '^') {
        get();
        skip();
        std::string e = digits();
        if (e.size() > 6) fail("exponent too large");
        k = std::stoi(e);
      }
    } else if (!has_coeff) {
      fail("expected a coefficient or 'z'");
    }
    return {k, c};
  }
};

}  // namespace

std::vector<std::pair<int, Rational>> parse_terms(std::string_view text) {
  return TermParser(text).run();
}

}  // namespace fps::io
