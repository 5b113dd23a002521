#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "emdpoly/bigint.hpp"
#include "emdpoly/caps.hpp"
#include "emdpoly/partition.hpp"
#include "emdpoly/poly.hpp"

namespace emdpoly {

/* The one-dimensional earth mover's distance on integer compositions, its
 * partition bijection, and the expected-value closed forms.
 */

// Histogram with a fixed number of bins: n >= 1 nonnegative parts.
class Composition {
 public:
  explicit Composition(std::vector<long long> parts);

  int bins() const { return static_cast<int>(parts_.size()); }
  long long total() const { return total_; }
  long long part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<long long>& parts() const { return parts_; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<long long> parts_;
  long long total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

// All of C(s, n) in lexicographically decreasing order ((s,0,...,0) first).
// Count is C(s+n-1, s); throws CapExceeded beyond max_count.
std::vector<Composition> enumerate_compositions(
    long long s, int n, unsigned long long max_count = kDefaultMaxCompositions);

// 1-D EMD via prefix sums: Σ_i |Σ_{j<=i}(α_j - β_j)|.  Throws
// std::invalid_argument unless bins and totals match.
long long emd(const Composition& a, const Composition& b);

// α ↦ ((n-1)^{α_1}, (n-2)^{α_2}, ..., 1^{α_{n-1}}): the bijection
// C(s,n) → Par(s × (n-1)).  α_n is unused (it is determined by s).
Partition comp_to_partition(const Composition& a);

// EMD through the bijection: |λ ⊖ μ| of the image partitions.  Must agree
// with emd(); kept as an independently computed route.
long long emd_via_bijection(const Composition& a, const Composition& b);

// Σ EMD(α, β) over C(s,p) × C(s,q); shorter compositions are zero-padded
// to max(p,q) bins.  OpenMP kernel with a serial:: reference.
BigInt sum_emd_pairs(long long s, int p, int q,
                     unsigned long long max_pairs = kDefaultMaxPairs);

namespace serial {
BigInt sum_emd_pairs(long long s, int p, int q,
                     unsigned long long max_pairs = kDefaultMaxPairs);
}  // namespace serial

// [t^s] H'_n(t) by brute force: Σ EMD over C(s,n)².
BigInt hprime_coeff_bruteforce(long long s, int n,
                               unsigned long long max_pairs = kDefaultMaxPairs);

// [t^s] H'_n(t) in closed form: s(n-1)/(4s+4(n-1)+2) · C(2s+2(n-1)+2, 2s+1),
// an exact integer (divisibility asserted); 0 when s = 0 or n = 1.
BigInt hprime_coeff_closed(long long s, long long n);

// First `terms` coefficients of numer(t)/(1-t)^pole_order.
std::vector<BigInt> series_expand(const IntPoly& numer, int pole_order,
                                  int terms);

// E[EMD(α,β)] for (α,β) uniform on C(s,n)²:
//   s(n-1)/(4s+4n-2) · C(2s+2n, 2s+1) / C(s+n-1, s)².
Rational expected_emd(long long s, long long n);

// L(n) = lim_{s→∞} E[EMD]/s = 2^(2n-3)·(n-1)·((n-1)!)² / (2n-1)!.
Rational expected_emd_limit(long long n);

}  // namespace emdpoly
