#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emdpoly/bigint.hpp"
#include "emdpoly/caps.hpp"

namespace emdpoly {

/* Integer polynomials in t: the W_pq and N_pq families, their closed
 * forms, and the shape checkers (palindromic / unimodal / real-rooted).
 */

// Dense integer polynomial, coefficients indexed from degree 0 with
// trailing zeros stripped.  The zero polynomial stores no coefficients and
// has no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly monomial(BigInt coeff, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  // Lowest nonzero degree; nullopt for the zero polynomial.
  std::optional<std::size_t> low_degree() const;
  BigInt coeff(std::size_t k) const;  // zero beyond the stored range
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly shifted(std::size_t k) const;  // multiply by t^k
  IntPoly scaled(const BigInt& c) const;
  std::string to_string() const;  // e.g. "20t + 56t^2 + 20t^3"

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

 private:
  void strip();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

// W_pq(t) = Σ_{k=0}^{min(p,q)-1} C(p-1,k)·C(q-1,k)·t^k, for p,q >= 1.
IntPoly w_poly(int p, int q);

// N_pq(t) by bottom-up dynamic programming over the recursion
//   N_pq = N_{p-1,q} + N_{p,q-1} - (1-t)·N_{p-1,q-1} + |p-q|·t·W_pq
// with N_{0,q} = N_{p,0} = N_{1,1} = 0.  Accepts p,q >= 0.
IntPoly n_poly_recursive(int p, int q);

// N_pq(t) rebuilt coefficient-by-coefficient from brute-force
// symmetric-difference sums: [t^k] = S_⊖(k, p-k | k, q-k).  p,q >= 1.
IntPoly n_poly_symdiff(int p, int q,
                       unsigned long long max_pairs = kDefaultMaxPairs);

// N_n(t) = 1/(4n+2) · Σ_{k=1}^{n-1} k(n-k)·C(2n+2, 2k+1)·t^k, n >= 1.
// Throws std::logic_error if any coefficient fails the exact division by
// 4n+2 (that would be an implementation bug, not a data condition).
IntPoly n_poly_closed(int n);

// f_k = f_{d-k} on the support window, d = low + degree.  The zero
// polynomial counts as palindromic by convention (the usual definition
// presumes a nonzero polynomial).
bool is_palindromic(const IntPoly& f);

// Coefficients over the support window weakly rise then weakly fall.
// Zero polynomial: true, same convention as is_palindromic.
bool is_unimodal(const IntPoly& f);

BigInt eval_at_one(const IntPoly& f);

// Number of distinct real roots, decided exactly: square-free part
// g = f / gcd(f, f'), Sturm chain of g over rationals, sign changes at
// -inf minus sign changes at +inf.  Throws std::invalid_argument on the
// zero polynomial.
int count_distinct_real_roots(const IntPoly& f);

// True iff the square-free part of f splits over the reals, i.e. the
// distinct-real-root count equals its degree.
bool is_real_rooted(const IntPoly& f);

// S(n) = n·2^(2n-1), OEIS A002699; S(0) = 0.
BigInt la_haye_S(long long n);

// Σ |X △ Y| over all ordered pairs of subsets of {1..n}, by brute force
// over all 4^n pairs.  Throws CapExceeded for n above the cap.
// OpenMP-parallel; serial::subset_symdiff_sum is the reference loop.
BigInt subset_symdiff_sum(int n, int cap = kDefaultSubsetCap);

namespace serial {
BigInt subset_symdiff_sum(int n, int cap = kDefaultSubsetCap);
}  // namespace serial

}  // namespace emdpoly
