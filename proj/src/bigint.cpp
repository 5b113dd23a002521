#include "emdpoly/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace emdpoly {

BigInt binomial(long long n, long long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after each step
  }
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: n must be nonnegative");
  }
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Rational rat_div(const Rational& a, const Rational& b) {
  if (b == 0) {
    throw std::domain_error("rat_div: division by zero");
  }
  return a / b;
}

std::string rational_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string rational_decimal(const Rational& value, int digits) {
  if (digits < 0) {
    throw std::invalid_argument("rational_decimal: digits must be nonnegative");
  }
  BigInt num = numerator(value);
  const BigInt den = denominator(value);
  const bool negative = num < 0;
  if (negative) {
    num = -num;
  }
  const BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
  // round to nearest, ties away from zero
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);
  std::string out = negative && scaled != 0 ? "-" : "";
  out += BigInt(scaled / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(scaled % scale).str();
    out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace emdpoly
