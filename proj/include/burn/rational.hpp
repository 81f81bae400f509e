#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace burn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p/q", an integer, or a decimal such as "1e-12" / "0.25" exactly.
Rational parse_rational(const std::string& text);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Exact base^e by repeated squaring.
Rational pow(const Rational& base, unsigned e);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace burn
