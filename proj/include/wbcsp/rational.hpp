#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wbcsp {

// All weights and partition values are exact rationals: arbitrary-precision
// numerator and positive denominator, always in lowest terms.  No floating
// point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q" (decimal, q > 0).  Anything else throws
// PreconditionError, including "1/0" and embedded whitespace.
Rational parse_rational(const std::string& text);

// Lowest terms, "p" for integers, "p/q" otherwise.  parse_rational is its
// inverse on all values.
std::string format_rational(const Rational& value);

// Exact q^m for m >= 0 (q^0 = 1).
Rational pow_rational(const Rational& base, unsigned long exponent);

// 2^n as a big integer.
BigInt pow2(unsigned n);

inline Rational abs_rational(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace wbcsp
