#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace emdpoly {

// All library math is exact; floating point never appears outside of the
// CLI's decimal display helper below (which itself rounds in integer
// arithmetic).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k).  Requires n >= 0; returns 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

// n! for n >= 0.
BigInt factorial(long long n);

// Checked division; throws std::domain_error on a zero divisor.
Rational rat_div(const Rational& a, const Rational& b);

// "8/9", or just the numerator when the denominator is 1.
std::string rational_string(const Rational& value);

// Decimal rendering with `digits` fractional digits, rounded to nearest
// (ties away from zero).  digits >= 0.
std::string rational_decimal(const Rational& value, int digits);

}  // namespace emdpoly
