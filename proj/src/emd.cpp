#include "emdpoly/emd.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "emdpoly/log.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace emdpoly {

Composition::Composition(std::vector<long long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("Composition: needs at least one bin");
  }
  for (long long p : parts_) {
    if (p < 0) {
      throw std::invalid_argument("Composition: parts must be nonnegative");
    }
    total_ += p;
  }
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  os << '(';
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i > 0) os << ',';
    os << c.parts()[i];
  }
  return os << ')';
}

namespace {

void emit_compositions(std::vector<long long>& cur, std::size_t bin, long long rest,
                       std::vector<Composition>& out) {
  if (bin + 1 == cur.size()) {
    cur[bin] = rest;
    out.push_back(Composition(cur));
    return;
  }
  for (long long v = rest; v >= 0; --v) {
    cur[bin] = v;
    emit_compositions(cur, bin + 1, rest - v, out);
  }
}

void check_emd_pair(const Composition& a, const Composition& b) {
  if (a.bins() != b.bins() || a.total() != b.total()) {
    throw std::invalid_argument(
        "emd: compositions must have the same number of bins and the same total");
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(long long s, int n,
                                                unsigned long long max_count) {
  if (s < 0 || n < 1) {
    throw std::invalid_argument("enumerate_compositions: need s >= 0 and n >= 1");
  }
  const BigInt count = binomial(s + n - 1, s);
  if (count > max_count) {
    throw CapExceeded("enumerate_compositions: |C(" + std::to_string(s) + "," +
                      std::to_string(n) + ")| = " + count.str() +
                      " exceeds the cap of " + std::to_string(max_count));
  }
  std::vector<Composition> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<long long> cur(static_cast<std::size_t>(n));
  emit_compositions(cur, 0, s, out);
  return out;
}

long long emd(const Composition& a, const Composition& b) {
  check_emd_pair(a, b);
  long long carry = 0;
  long long work = 0;
  for (int i = 0; i < a.bins(); ++i) {
    carry += a.part(i) - b.part(i);
    work += std::llabs(carry);
  }
  return work;
}

Partition comp_to_partition(const Composition& a) {
  std::vector<int> parts;
  const int n = a.bins();
  for (int i = 0; i + 1 < n; ++i) {
    for (long long r = 0; r < a.part(i); ++r) {
      parts.push_back(n - 1 - i);
    }
  }
  return Partition(std::move(parts));
}

long long emd_via_bijection(const Composition& a, const Composition& b) {
  check_emd_pair(a, b);
  return sym_diff_size(comp_to_partition(a), comp_to_partition(b));
}

namespace {

struct PaddedPairs {
  std::vector<Composition> left;
  std::vector<Composition> right;
};

std::vector<Composition> pad_to(const std::vector<Composition>& in, int bins) {
  std::vector<Composition> out;
  out.reserve(in.size());
  for (const Composition& c : in) {
    std::vector<long long> parts = c.parts();
    parts.resize(static_cast<std::size_t>(bins), 0);
    out.push_back(Composition(std::move(parts)));
  }
  return out;
}

PaddedPairs prepare_pairs(long long s, int p, int q, unsigned long long max_pairs) {
  if (s < 0 || p < 1 || q < 1) {
    throw std::invalid_argument("sum_emd_pairs: need s >= 0 and p, q >= 1");
  }
  const BigInt count_l = binomial(s + p - 1, s);
  const BigInt count_r = binomial(s + q - 1, s);
  const BigInt pair_count = count_l * count_r;
  if (pair_count > max_pairs) {
    throw CapExceeded("sum_emd_pairs: " + pair_count.str() +
                      " ordered pairs exceed the cap of " +
                      std::to_string(max_pairs) + " (raise --max-pairs)");
  }
  const int bins = std::max(p, q);
  PaddedPairs pairs;
  pairs.left = pad_to(
      enumerate_compositions(s, p, static_cast<unsigned long long>(count_l)), bins);
  pairs.right =
      p == q ? pairs.left
             : pad_to(enumerate_compositions(
                          s, q, static_cast<unsigned long long>(count_r)),
                      bins);
  return pairs;
}

}  // namespace

BigInt sum_emd_pairs(long long s, int p, int q, unsigned long long max_pairs) {
#ifndef _OPENMP
  return serial::sum_emd_pairs(s, p, q, max_pairs);
#else
  const PaddedPairs pairs = prepare_pairs(s, p, q, max_pairs);
  const long long nl = static_cast<long long>(pairs.left.size());
  if (log_enabled(LogLevel::kDebug)) {
    log_line(LogLevel::kDebug,
             "sum_emd_pairs: " +
                 std::to_string(pairs.left.size() * pairs.right.size()) +
                 " pairs on " + std::to_string(omp_get_max_threads()) + " threads");
  }
  std::vector<BigInt> partials(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < nl; ++i) {
      long long row = 0;
      for (const Composition& beta : pairs.right) {
        row += emd(pairs.left[static_cast<std::size_t>(i)], beta);
      }
      local += row;
    }
    partials[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  BigInt total = 0;
  for (const BigInt& part : partials) {
    total += part;
  }
  return total;
#endif
}

namespace serial {

BigInt sum_emd_pairs(long long s, int p, int q, unsigned long long max_pairs) {
  const PaddedPairs pairs = prepare_pairs(s, p, q, max_pairs);
  BigInt total = 0;
  for (const Composition& alpha : pairs.left) {
    long long row = 0;
    for (const Composition& beta : pairs.right) {
      row += emd(alpha, beta);
    }
    total += row;
  }
  return total;
}

}  // namespace serial

BigInt hprime_coeff_bruteforce(long long s, int n, unsigned long long max_pairs) {
  return sum_emd_pairs(s, n, n, max_pairs);
}

BigInt hprime_coeff_closed(long long s, long long n) {
  if (s < 0 || n < 1) {
    throw std::invalid_argument("hprime_coeff_closed: need s >= 0 and n >= 1");
  }
  if (s == 0 || n == 1) {
    return 0;
  }
  const BigInt numer = BigInt(s) * (n - 1) * binomial(2 * s + 2 * n, 2 * s + 1);
  const BigInt divisor = 4 * s + 4 * n - 2;
  if (numer % divisor != 0) {
    throw std::logic_error("hprime_coeff_closed: Wiener formula not integral");
  }
  return numer / divisor;
}

std::vector<BigInt> series_expand(const IntPoly& numer, int pole_order, int terms) {
  if (pole_order < 1 || terms < 1) {
    throw std::invalid_argument("series_expand: need pole_order >= 1 and terms >= 1");
  }
  // 1/(1-t)^r = Σ C(s+r-1, r-1) t^s; convolve with the numerator.
  std::vector<BigInt> out(static_cast<std::size_t>(terms));
  for (long long s = 0; s < terms; ++s) {
    BigInt c = 0;
    const long long top = std::min<long long>(s, static_cast<long long>(numer.coeffs().size()) - 1);
    for (long long j = 0; j <= top; ++j) {
      c += numer.coeff(static_cast<std::size_t>(j)) *
           binomial(s - j + pole_order - 1, pole_order - 1);
    }
    out[static_cast<std::size_t>(s)] = std::move(c);
  }
  return out;
}

Rational expected_emd(long long s, long long n) {
  if (s < 0 || n < 1) {
    throw std::invalid_argument("expected_emd: need s >= 0 and n >= 1");
  }
  const BigInt pairs = binomial(s + n - 1, s);
  return Rational(hprime_coeff_closed(s, n), pairs * pairs);
}

Rational expected_emd_limit(long long n) {
  if (n < 1) {
    throw std::invalid_argument("expected_emd_limit: n must be positive");
  }
  if (n == 1) {
    return 0;
  }
  const BigInt f = factorial(n - 1);
  const BigInt numer = (BigInt(1) << (2 * n - 3)) * (n - 1) * f * f;
  return Rational(numer, factorial(2 * n - 1));
}

}  // namespace emdpoly
