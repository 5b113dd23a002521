#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "emdpoly/bigint.hpp"
#include "emdpoly/caps.hpp"

namespace emdpoly {

/* Young diagrams bounded by rectangles: enumeration, conjugation and the
 * symmetric-difference pair sums that everything else cross-checks against.
 */

// A partition: weakly decreasing positive parts, stored without trailing
// zeros.  The default value is the empty diagram.
class Partition {
 public:
  Partition() = default;
  // Strips trailing zeros; throws std::invalid_argument if the remaining
  // parts are not weakly decreasing positive integers.
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  // Row length, zero beyond the stored rows.
  int part(int row) const;
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part vector.  Because parts are positive and
  // weakly decreasing, this coincides with lexicographic order on the
  // zero-padded vectors.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Rectangle with `rows` rows and `cols` columns; either may be zero.
struct RectBound {
  int rows = 0;
  int cols = 0;
};

// True iff length(p) <= bound.rows and width(p) <= bound.cols.
bool fits(const Partition& p, RectBound bound);

// Reflection across the main diagonal (rows become columns).
Partition conjugate(const Partition& p);

// |λ ⊖ μ|: number of boxes in exactly one of the two diagrams.  Computed
// row-wise as Σ|λ_i − μ_i|, which equals the literal box-set symmetric
// difference because row prefixes nest.
long long sym_diff_size(const Partition& a, const Partition& b);

// Every element of Par(rows × cols) exactly once, lexicographically
// increasing on the zero-padded part vector (∅ first, full rectangle last).
std::vector<Partition> enumerate_partitions(RectBound bound);

// S_⊖(a,b | c,d): Σ|λ ⊖ μ| over all ordered pairs in
// Par(a×b) × Par(c×d), by direct double enumeration so that it can serve
// as the oracle for every closed form in the library.  OpenMP-parallel
// over the left index; serial::sum_sym_diff is the reference loop.
// Throws CapExceeded when the pair count exceeds max_pairs.
BigInt sum_sym_diff(RectBound lhs, RectBound rhs,
                    unsigned long long max_pairs = kDefaultMaxPairs);

namespace serial {
BigInt sum_sym_diff(RectBound lhs, RectBound rhs,
                    unsigned long long max_pairs = kDefaultMaxPairs);
}  // namespace serial

}  // namespace emdpoly
