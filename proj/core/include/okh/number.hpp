#pragma once

// Exact scalar types shared by every layer of the engine.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace okh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "-p/q" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lossless text form: "p" for integral values, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Numerator of an integral rational; throws std::domain_error otherwise.
Integer to_integer(const Rational& value);

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline std::int64_t to_int64(const Integer& v) {
  return v.convert_to<std::int64_t>();
}

/// Floor modulus with a non-negative result for positive m.
Integer mod_floor(const Integer& a, const Integer& m);

struct Bezout {
  Integer g;
  Integer s;
  Integer t;
};

/// g = gcd(a, b) >= 0 and s*a + t*b = g.
Bezout extended_gcd(const Integer& a, const Integer& b);

}  // namespace okh
