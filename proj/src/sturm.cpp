#include "emdpoly/poly.hpp"

#include <stdexcept>
#include <vector>

namespace emdpoly {

namespace {

// Dense rational polynomial, degree-ascending, trailing zeros stripped.
using RatPoly = std::vector<Rational>;

void strip(RatPoly& f) {
  while (!f.empty() && f.back() == 0) {
    f.pop_back();
  }
}

int deg(const RatPoly& f) {
  return static_cast<int>(f.size()) - 1;  // -1 for the zero polynomial
}

RatPoly from_int(const IntPoly& f) {
  RatPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Rational(f.coeffs()[i]);
  }
  return out;
}

RatPoly derivative(const RatPoly& f) {
  if (f.size() <= 1) {
    return {};
  }
  RatPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    out[i - 1] = f[i] * static_cast<long long>(i);
  }
  return out;
}

// Remainder of a by b; b nonzero.
RatPoly rem(RatPoly a, const RatPoly& b) {
  while (deg(a) >= deg(b)) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] -= factor * b[i];
    }
    a.pop_back();  // leading term cancelled exactly
    strip(a);
    if (a.empty()) {
      break;
    }
  }
  return a;
}

// Exact quotient a / b, asserting zero remainder.
RatPoly div_exact(RatPoly a, const RatPoly& b) {
  if (deg(a) < deg(b)) {
    throw std::logic_error("div_exact: divisor of larger degree");
  }
  RatPoly q(a.size() - b.size() + 1);
  while (deg(a) >= deg(b)) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] -= factor * b[i];
    }
    a.pop_back();
    strip(a);
    if (a.empty()) {
      break;
    }
  }
  if (!a.empty()) {
    throw std::logic_error("div_exact: nonzero remainder");
  }
  return q;
}

RatPoly monic(RatPoly f) {
  if (!f.empty()) {
    const Rational lead = f.back();
    for (Rational& c : f) {
      c /= lead;
    }
  }
  return f;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = monic(std::move(r));  // rescaling keeps coefficient growth in check
  }
  return monic(std::move(a));
}

RatPoly squarefree_part(const RatPoly& f) {
  const RatPoly d = derivative(f);
  if (d.empty()) {
    // nonzero constant
    return monic(f);
  }
  return div_exact(f, poly_gcd(f, d));
}

// Scales by a positive constant so the leading coefficient is +-1; sign
// patterns of the chain are unchanged.
RatPoly positive_normalize(RatPoly f) {
  if (!f.empty()) {
    Rational lead = f.back();
    if (lead < 0) {
      lead = -lead;
    }
    for (Rational& c : f) {
      c /= lead;
    }
  }
  return f;
}

int sign(const Rational& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

// Sign changes of the chain at +inf (signs of leading coefficients) or at
// -inf (flipped on odd degrees).
int sign_changes_at_infinity(const std::vector<RatPoly>& chain, bool at_minus) {
  int changes = 0;
  int prev = 0;
  for (const RatPoly& f : chain) {
    int s = sign(f.back());
    if (at_minus && deg(f) % 2 == 1) {
      s = -s;
    }
    if (prev != 0 && s != prev) {
      ++changes;
    }
    prev = s;
  }
  return changes;
}

int sturm_distinct_roots(const RatPoly& squarefree) {
  if (deg(squarefree) == 0) {
    return 0;
  }
  std::vector<RatPoly> chain;
  chain.push_back(positive_normalize(squarefree));
  chain.push_back(positive_normalize(derivative(squarefree)));
  while (deg(chain.back()) > 0) {
    RatPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) {
      // cannot happen for a square-free input, where gcd(g, g') is constant
      throw std::logic_error("sturm: chain terminated with a zero remainder");
    }
    for (Rational& c : r) {
      c = -c;
    }
    chain.push_back(positive_normalize(std::move(r)));
  }
  return sign_changes_at_infinity(chain, true) -
         sign_changes_at_infinity(chain, false);
}

RatPoly squarefree_of(const IntPoly& f, const char* caller) {
  if (f.is_zero()) {
    throw std::invalid_argument(std::string(caller) + ": zero polynomial");
  }
  return squarefree_part(from_int(f));
}

}  // namespace

int count_distinct_real_roots(const IntPoly& f) {
  return sturm_distinct_roots(squarefree_of(f, "count_distinct_real_roots"));
}

bool is_real_rooted(const IntPoly& f) {
  const RatPoly g = squarefree_of(f, "is_real_rooted");
  return sturm_distinct_roots(g) == deg(g);
}

}  // namespace emdpoly
