#pragma once

#include <stdexcept>

namespace emdpoly {

// Default resource caps for the brute-force enumeration kernels.  The CLI
// exposes --max-pairs and --max-vertices to override the first two.
inline constexpr unsigned long long kDefaultMaxPairs = 100'000'000ULL;
inline constexpr unsigned long long kDefaultMaxVertices = 100'000ULL;
inline constexpr unsigned long long kDefaultMaxCompositions = 1'000'000ULL;
inline constexpr int kDefaultSubsetCap = 12;

// Thrown when an enumeration would exceed its configured cap.  The message
// names the offending size and the limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emdpoly
