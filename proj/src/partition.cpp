#include "emdpoly/partition.hpp"

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

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) {
    parts_.pop_back();
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing positive integers");
    }
  }
}

int Partition::part(int row) const {
  if (row < 0 || row >= length()) {
    return 0;
  }
  return parts_[static_cast<std::size_t>(row)];
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

bool fits(const Partition& p, RectBound bound) {
  return p.length() <= bound.rows && p.width() <= bound.cols;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.width()));
  for (int c = 0; c < p.width(); ++c) {
    int rows = 0;
    while (rows < p.length() && p.part(rows) > c) {
      ++rows;
    }
    cols[static_cast<std::size_t>(c)] = rows;
  }
  return Partition(std::move(cols));
}

long long sym_diff_size(const Partition& a, const Partition& b) {
  const int rows = std::max(a.length(), b.length());
  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    total += std::abs(static_cast<long long>(a.part(i)) - b.part(i));
  }
  return total;
}

namespace {

void emit_partitions(std::vector<int>& prefix, int rows_left, int max_part,
                     std::vector<Partition>& out) {
  // The all-zero completion comes first, keeping the order lexicographic
  // on zero-padded part vectors.
  out.push_back(Partition(prefix));
  if (rows_left == 0) {
    return;
  }
  for (int v = 1; v <= max_part; ++v) {
    prefix.push_back(v);
    emit_partitions(prefix, rows_left - 1, v, out);
    prefix.pop_back();
  }
}

void check_pair_cap(const char* what, RectBound lhs, RectBound rhs,
                    unsigned long long max_pairs) {
  const BigInt pairs = binomial(lhs.rows + lhs.cols, lhs.rows) *
                       binomial(rhs.rows + rhs.cols, rhs.rows);
  if (pairs > max_pairs) {
    throw CapExceeded(std::string(what) + ": " + pairs.str() +
                      " ordered pairs exceed the cap of " +
                      std::to_string(max_pairs) + " (raise --max-pairs)");
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(RectBound bound) {
  if (bound.rows < 0 || bound.cols < 0) {
    throw std::invalid_argument("enumerate_partitions: bound must be nonnegative");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(prefix, bound.rows, bound.cols, out);
  return out;
}

BigInt sum_sym_diff(RectBound lhs, RectBound rhs, unsigned long long max_pairs) {
#ifndef _OPENMP
  return serial::sum_sym_diff(lhs, rhs, max_pairs);
#else
  check_pair_cap("sum_sym_diff", lhs, rhs, max_pairs);
  const auto left = enumerate_partitions(lhs);
  const auto right = enumerate_partitions(rhs);
  const long long nl = static_cast<long long>(left.size());
  if (log_enabled(LogLevel::kDebug)) {
    log_line(LogLevel::kDebug,
             "sum_sym_diff: " + std::to_string(left.size() * right.size()) +
                 " pairs on " + std::to_string(omp_get_max_threads()) + " threads");
  }
  std::vector<BigInt> partials(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < nl; ++i) {
      long long row = 0;
      for (const Partition& mu : right) {
        row += sym_diff_size(left[static_cast<std::size_t>(i)], mu);
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

BigInt sum_sym_diff(RectBound lhs, RectBound rhs, unsigned long long max_pairs) {
  check_pair_cap("sum_sym_diff", lhs, rhs, max_pairs);
  const auto left = enumerate_partitions(lhs);
  const auto right = enumerate_partitions(rhs);
  BigInt total = 0;
  for (const Partition& lambda : left) {
    long long row = 0;
    for (const Partition& mu : right) {
      row += sym_diff_size(lambda, mu);
    }
    total += row;
  }
  return total;
}

}  // namespace serial

}  // namespace emdpoly
