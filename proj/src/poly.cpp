#include "emdpoly/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "emdpoly/partition.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace emdpoly {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

IntPoly IntPoly::monomial(BigInt coeff, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

void IntPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

std::optional<std::size_t> IntPoly::low_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      return k;
    }
  }
  return std::nullopt;
}

BigInt IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) {
    return {};
  }
  std::vector<BigInt> c(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[i + k] = coeffs_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * c;
  }
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(i) + b.coeff(i);
  }
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(i) - b.coeff(i);
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) {
      continue;
    }
    BigInt c = coeffs_[k];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const bool unit = c == 1 && k > 0;
    if (!unit) {
      out += c.str();
    }
    if (k == 1) {
      out += "t";
    } else if (k > 1) {
      out += "t^" + std::to_string(k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
  return os << f.to_string();
}

IntPoly w_poly(int p, int q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("w_poly: p and q must be positive");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(std::min(p, q)));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = binomial(p - 1, static_cast<long long>(k)) *
           binomial(q - 1, static_cast<long long>(k));
  }
  return IntPoly(std::move(c));
}

IntPoly n_poly_recursive(int p, int q) {
  if (p < 0 || q < 0) {
    throw std::invalid_argument("n_poly_recursive: p and q must be nonnegative");
  }
  // Bottom-up table over [0..p] x [0..q]; row 0 and column 0 stay zero.
  std::vector<std::vector<IntPoly>> table(
      static_cast<std::size_t>(p) + 1,
      std::vector<IntPoly>(static_cast<std::size_t>(q) + 1));
  const IntPoly one_minus_t({1, -1});
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= q; ++j) {
      IntPoly value = table[i - 1][j] + table[i][j - 1] -
                      one_minus_t * table[i - 1][j - 1];
      if (i != j) {
        value = value + w_poly(i, j).shifted(1).scaled(std::abs(i - j));
      }
      table[i][j] = std::move(value);
    }
  }
  return table[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

IntPoly n_poly_symdiff(int p, int q, unsigned long long max_pairs) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("n_poly_symdiff: p and q must be positive");
  }
  const int kmax = std::min(p, q);
  std::vector<BigInt> c(static_cast<std::size_t>(kmax) + 1);
  for (int k = 1; k <= kmax; ++k) {
    c[static_cast<std::size_t>(k)] =
        sum_sym_diff({k, p - k}, {k, q - k}, max_pairs);
  }
  return IntPoly(std::move(c));
}

IntPoly n_poly_closed(int n) {
  if (n < 1) {
    throw std::invalid_argument("n_poly_closed: n must be positive");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  const BigInt divisor = 4 * BigInt(n) + 2;
  for (int k = 1; k <= n - 1; ++k) {
    BigInt numer = BigInt(k) * (n - k) * binomial(2LL * n + 2, 2LL * k + 1);
    if (numer % divisor != 0) {
      throw std::logic_error("n_poly_closed: coefficient not divisible by 4n+2");
    }
    c[static_cast<std::size_t>(k)] = numer / divisor;
  }
  return IntPoly(std::move(c));
}

bool is_palindromic(const IntPoly& f) {
  if (f.is_zero()) {
    return true;  // convention; the usual definition presumes f != 0
  }
  const std::size_t a = *f.low_degree();
  const std::size_t b = *f.degree();
  for (std::size_t k = a; k <= b; ++k) {
    if (f.coeff(k) != f.coeff(a + b - k)) {
      return false;
    }
  }
  return true;
}

bool is_unimodal(const IntPoly& f) {
  if (f.is_zero()) {
    return true;
  }
  std::size_t k = *f.low_degree();
  const std::size_t b = *f.degree();
  while (k < b && f.coeff(k) <= f.coeff(k + 1)) {
    ++k;
  }
  while (k < b && f.coeff(k) >= f.coeff(k + 1)) {
    ++k;
  }
  return k == b;
}

BigInt eval_at_one(const IntPoly& f) {
  BigInt total = 0;
  for (const BigInt& c : f.coeffs()) {
    total += c;
  }
  return total;
}

BigInt la_haye_S(long long n) {
  if (n < 0) {
    throw std::invalid_argument("la_haye_S: n must be nonnegative");
  }
  if (n == 0) {
    return 0;
  }
  return BigInt(n) << (2 * n - 1);
}

namespace {

void check_subset_cap(int n, int cap) {
  if (n < 0) {
    throw std::invalid_argument("subset_symdiff_sum: n must be nonnegative");
  }
  // 4^n pairs; 30 bounds the shift below no matter what cap was requested
  const int effective = std::min(cap, 30);
  if (n > effective) {
    throw CapExceeded("subset_symdiff_sum: n=" + std::to_string(n) +
                      " exceeds the brute-force cap of " +
                      std::to_string(effective));
  }
}

}  // namespace

BigInt subset_symdiff_sum(int n, int cap) {
#ifndef _OPENMP
  return serial::subset_symdiff_sum(n, cap);
#else
  check_subset_cap(n, cap);
  const long long size = 1LL << n;
  std::vector<BigInt> partials(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(static) nowait
    for (long long x = 0; x < size; ++x) {
      long long row = 0;
      for (long long y = 0; y < size; ++y) {
        row += std::popcount(static_cast<unsigned long long>(x ^ y));
      }
      local += row;
    }
    partials[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  BigInt total = 0;
  for (const BigInt& p : partials) {
    total += p;
  }
  return total;
#endif
}

namespace serial {

BigInt subset_symdiff_sum(int n, int cap) {
  check_subset_cap(n, cap);
  const long long size = 1LL << n;
  BigInt total = 0;
  for (long long x = 0; x < size; ++x) {
    long long row = 0;
    for (long long y = 0; y < size; ++y) {
      row += std::popcount(static_cast<unsigned long long>(x ^ y));
    }
    total += row;
  }
  return total;
}

}  // namespace serial

}  // namespace emdpoly
