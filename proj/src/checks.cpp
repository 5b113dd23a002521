#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "emdpoly/bigint.hpp"
#include "emdpoly/emd.hpp"
#include "emdpoly/hasse.hpp"
#include "emdpoly/log.hpp"
#include "emdpoly/partition.hpp"
#include "emdpoly/poly.hpp"
#include "emdpoly/report.hpp"

namespace emdpoly {

namespace {

// Each suite records its swept ranges in params, stops at the first failing
// instance and reports it as the counterexample.
struct Outcome {
  std::map<std::string, long long> params;
  std::optional<std::string> counterexample;
};

Outcome check_palindromic(const CheckOptions& opts) {
  Outcome out;
  out.params["max_n"] = opts.max_n;
  for (int n = 1; n <= opts.max_n; ++n) {
    if (!is_palindromic(n_poly_closed(n))) {
      out.counterexample = "n=" + std::to_string(n);
      break;
    }
  }
  return out;
}

Outcome check_unimodal(const CheckOptions& opts) {
  Outcome out;
  out.params["max_n"] = opts.max_n;
  for (int n = 1; n <= opts.max_n; ++n) {
    if (!is_unimodal(n_poly_closed(n))) {
      out.counterexample = "n=" + std::to_string(n);
      break;
    }
  }
  return out;
}

Outcome check_real_rooted(const CheckOptions& opts) {
  Outcome out;
  out.params["max_n"] = opts.max_n;
  for (int n = 2; n <= opts.max_n; ++n) {
    if (!is_real_rooted(n_poly_closed(n))) {
      out.counterexample = "n=" + std::to_string(n);
      break;
    }
  }
  return out;
}

Outcome check_closed_vs_recursive(const CheckOptions& opts) {
  Outcome out;
  out.params["max_n"] = opts.max_n;
  for (int n = 1; n <= opts.max_n; ++n) {
    const IntPoly closed = n_poly_closed(n);
    const IntPoly recursive = n_poly_recursive(n, n);
    if (closed != recursive) {
      out.counterexample = "n=" + std::to_string(n) + ": closed " +
                           closed.to_string() + " != recursive " +
                           recursive.to_string();
      break;
    }
  }
  return out;
}

Outcome check_symdiff_vs_recursive(const CheckOptions& opts) {
  Outcome out;
  out.params["max_pq"] = opts.max_n;
  for (int p = 1; p <= opts.max_n && !out.counterexample; ++p) {
    for (int q = 1; q <= opts.max_n; ++q) {
      if (n_poly_symdiff(p, q, opts.max_pairs) != n_poly_recursive(p, q)) {
        out.counterexample = "p=" + std::to_string(p) + ",q=" + std::to_string(q);
        break;
      }
    }
  }
  return out;
}

Outcome check_emd_oracle(const CheckOptions& opts) {
  Outcome out;
  const int max_bins = std::min(opts.max_n, 6);
  out.params["max_s"] = opts.max_s;
  out.params["max_bins"] = max_bins;
  for (long long s = 0; s <= opts.max_s; ++s) {
    for (int n = 1; n <= max_bins; ++n) {
      const auto comps = enumerate_compositions(s, n);
      BigInt pair_sum = 0;
      for (const Composition& alpha : comps) {
        for (const Composition& beta : comps) {
          const long long direct = emd(alpha, beta);
          if (direct != emd_via_bijection(alpha, beta)) {
            std::ostringstream os;
            os << "s=" << s << ",n=" << n << ": emd" << alpha << beta
               << " disagrees with the bijection route";
            out.counterexample = os.str();
            return out;
          }
          pair_sum += direct;
        }
      }
      const BigInt closed = hprime_coeff_closed(s, n);
      const BigInt lattice = sum_sym_diff({static_cast<int>(s), n - 1},
                                          {static_cast<int>(s), n - 1},
                                          opts.max_pairs);
      if (pair_sum != closed || pair_sum != lattice) {
        out.counterexample = "s=" + std::to_string(s) + ",n=" + std::to_string(n) +
                             ": pair sum " + pair_sum.str() + ", closed " +
                             closed.str() + ", lattice " + lattice.str();
        return out;
      }
    }
  }
  return out;
}

Outcome check_wiener_triple(const CheckOptions& opts) {
  Outcome out;
  const int max_ab = std::min(opts.max_n, 6);
  out.params["max_ab"] = max_ab;
  for (int a = 1; a <= max_ab && !out.counterexample; ++a) {
    for (int b = 1; b <= max_ab; ++b) {
      const BigInt formula = wiener_formula(a, b);
      const BigInt bfs = wiener_bfs(build_hasse({a, b}, opts.max_vertices));
      const BigInt pairs = sum_sym_diff({a, b}, {a, b}, opts.max_pairs);
      if (formula != bfs || formula != pairs) {
        out.counterexample = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                             ": formula " + formula.str() + ", bfs " + bfs.str() +
                             ", pair sum " + pairs.str();
        break;
      }
    }
  }
  return out;
}

Outcome check_conj_sum(const CheckOptions& opts) {
  Outcome out;
  const int subset_max = std::min(opts.max_n, kDefaultSubsetCap);
  out.params["max_n"] = opts.max_n;
  out.params["subset_max_n"] = subset_max;
  for (int n = 1; n <= opts.max_n; ++n) {
    const BigInt value = eval_at_one(n_poly_closed(n));
    if (value != la_haye_S(n - 1)) {
      out.counterexample = "n=" + std::to_string(n) + ": N_n(1) = " + value.str() +
                           " != S(n-1) = " + la_haye_S(n - 1).str();
      return out;
    }
  }
  for (int n = 0; n <= subset_max; ++n) {
    BigInt alternative = 0;  // S(n) = sum_{k=1..n} k * C(2n, k)
    for (long long k = 1; k <= n; ++k) {
      alternative += k * binomial(2LL * n, k);
    }
    const BigInt brute = subset_symdiff_sum(n, subset_max);
    if (brute != la_haye_S(n) || alternative != la_haye_S(n)) {
      out.counterexample = "n=" + std::to_string(n) + ": subset sum " +
                           brute.str() + ", alt " + alternative.str() +
                           ", S(n) = " + la_haye_S(n).str();
      return out;
    }
  }
  return out;
}

Outcome check_limit_convergence(const CheckOptions& opts) {
  Outcome out;
  const int max_bins = std::min(opts.max_n, 6);
  out.params["max_bins"] = max_bins;
  const long long samples[] = {10, 100, 1000};
  for (long long n = 1; n <= max_bins; ++n) {
    const Rational limit = expected_emd_limit(n);
    if (n == 1) {
      // degenerate case: everything is exactly zero
      if (limit != 0 || expected_emd(1000, 1) != 0) {
        out.counterexample = "n=1: expected exact zeros";
        return out;
      }
      continue;
    }
    Rational previous = -1;
    for (long long s : samples) {
      Rational error = expected_emd(s, n) / s - limit;
      if (error < 0) {
        error = -error;
      }
      if (previous >= 0 && error >= previous) {
        out.counterexample = "n=" + std::to_string(n) + ",s=" + std::to_string(s) +
                             ": error not decreasing";
        return out;
      }
      previous = error;
    }
    if (previous * 100 >= limit) {
      out.counterexample = "n=" + std::to_string(n) +
                           ": error at s=1000 not below 1% of the limit";
      return out;
    }
  }
  return out;
}

using CheckFn = Outcome (*)(const CheckOptions&);

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table = {
      {"palindromic", check_palindromic},
      {"unimodal", check_unimodal},
      {"real-rooted", check_real_rooted},
      {"closed-vs-recursive", check_closed_vs_recursive},
      {"symdiff-vs-recursive", check_symdiff_vs_recursive},
      {"emd-oracle", check_emd_oracle},
      {"wiener-triple", check_wiener_triple},
      {"conj-sum", check_conj_sum},
      {"limit-convergence", check_limit_convergence},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : check_table()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

VerificationReport run_check(const std::string& name, const CheckOptions& opts) {
  const auto it = check_table().find(name);
  if (it == check_table().end()) {
    throw std::invalid_argument("unknown check '" + name + "'");
  }
  log_line(LogLevel::kInfo, "running check " + name);
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome = it->second(opts);
  const auto stop = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = name;
  report.params = std::move(outcome.params);
  report.passed = !outcome.counterexample.has_value();
  report.counterexample = std::move(outcome.counterexample);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

}  // namespace emdpoly
