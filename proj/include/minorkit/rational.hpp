#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "minorkit/error.hpp"

namespace minorkit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected so
/// that no float ever reaches the exact core.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorCode::ParseError, "not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  const auto slash = s.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) bad();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(s, true);
    return Rational(BigInt(s[0] == '+' ? s.substr(1) : s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  BigInt d(den);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

/// Canonical "p/q" (or "p" when q == 1).
inline std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

inline Rational ceil_div_positive(const Rational& r) {
  // ceil for r >= 0
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (q * den != num) q += 1;
  return Rational(q);
}

using RationalVector = std::vector<Rational>;

}  // namespace minorkit
