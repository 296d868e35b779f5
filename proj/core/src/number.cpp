#include "okh/number.hpp"

#include <cctype>
#include <stdexcept>

namespace okh {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("invalid digit in '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer to_integer(const Rational& value) {
  if (!is_integral(value)) {
    throw std::domain_error("non-integral value " + to_string(value));
  }
  return boost::multiprecision::numerator(value);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer quot = old_r / r;
    Integer tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace okh
