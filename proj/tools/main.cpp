// Command-line front end: exact computation and verification sweeps for the
// N_pq / W_pq polynomial families, symmetric-difference sums over Young
// diagram lattices, and the one-dimensional EMD on compositions.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emdpoly/bigint.hpp"
#include "emdpoly/emd.hpp"
#include "emdpoly/hasse.hpp"
#include "emdpoly/log.hpp"
#include "emdpoly/partition.hpp"
#include "emdpoly/poly.hpp"
#include "emdpoly/report.hpp"

namespace {

using namespace emdpoly;

// Coefficients over the support window, lowest degree first.
std::vector<BigInt> window_coeffs(const IntPoly& f) {
  std::vector<BigInt> out;
  if (!f.is_zero()) {
    for (std::size_t k = *f.low_degree(); k <= *f.degree(); ++k) {
      out.push_back(f.coeff(k));
    }
  }
  return out;
}

void print_poly(const IntPoly& f, const std::string& format,
                const nlohmann::json& meta) {
  if (format == "plain") {
    const auto coeffs = window_coeffs(f);
    if (coeffs.empty()) {
      std::cout << "0\n";
      return;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << coeffs[i].str();
    }
    std::cout << '\n';
  } else if (format == "csv") {
    std::cout << "degree,coefficient\n";
    if (!f.is_zero()) {
      for (std::size_t k = *f.low_degree(); k <= *f.degree(); ++k) {
        std::cout << k << ',' << f.coeff(k).str() << '\n';
      }
    }
  } else {
    nlohmann::json j = meta;
    j["schema_version"] = kReportSchemaVersion;
    if (f.is_zero()) {
      j["low_degree"] = nullptr;
      j["degree"] = nullptr;
    } else {
      j["low_degree"] = *f.low_degree();
      j["degree"] = *f.degree();
    }
    j["coeffs"] = nlohmann::json::array();
    for (const BigInt& c : window_coeffs(f)) {
      j["coeffs"].push_back(c.str());
    }
    std::cout << j.dump() << '\n';
  }
}

void print_series(const std::vector<BigInt>& coeffs, const std::string& format,
                  const nlohmann::json& meta) {
  if (format == "plain") {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << coeffs[i].str();
    }
    std::cout << '\n';
  } else if (format == "csv") {
    std::cout << "s,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      std::cout << i << ',' << coeffs[i].str() << '\n';
    }
  } else {
    nlohmann::json j = meta;
    j["schema_version"] = kReportSchemaVersion;
    j["coeffs"] = nlohmann::json::array();
    for (const BigInt& c : coeffs) {
      j["coeffs"].push_back(c.str());
    }
    std::cout << j.dump() << '\n';
  }
}

void print_rational(const Rational& value, int decimal_digits) {
  std::cout << rational_string(value);
  if (decimal_digits >= 0) {
    std::cout << " (" << rational_decimal(value, decimal_digits) << ")";
  }
  std::cout << '\n';
}

Composition parse_composition(const std::string& text) {
  std::vector<long long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition entry '" + item + "'");
    }
    if (used != item.size()) {
      throw std::invalid_argument("bad composition entry '" + item + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) {
    throw std::invalid_argument("empty composition '" + text + "'");
  }
  return Composition(std::move(parts));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for EMD numerator polynomials, Young diagram"
               " lattices, and their verification sweeps"};
  app.require_subcommand(1);
  int exit_code = 0;

  const std::vector<std::string> formats = {"plain", "csv", "json"};

  // ---- npoly ----------------------------------------------------------
  struct {
    int n = -1;
    int p = -1;
    int q = -1;
    std::string method = "recursive";
    std::string format = "plain";
    unsigned long long max_pairs = kDefaultMaxPairs;
  } np;
  auto* npoly = app.add_subcommand(
      "npoly", "numerator polynomial N_pq(t) of H'_pq(t) = N_pq/(1-t)^(p+q)");
  npoly->add_option("n", np.n, "diagonal index: compute N_n = N_nn")
      ->check(CLI::NonNegativeNumber);
  npoly->add_option("--p", np.p, "left composition length")
      ->check(CLI::NonNegativeNumber);
  npoly->add_option("--q", np.q, "right composition length")
      ->check(CLI::NonNegativeNumber);
  npoly->add_option("--method", np.method, "recursive | closed | symdiff")
      ->check(CLI::IsMember({"recursive", "closed", "symdiff"}));
  npoly->add_option("--format", np.format, "plain | csv | json")
      ->check(CLI::IsMember(formats));
  npoly->add_option("--max-pairs", np.max_pairs,
                    "pair cap for the symdiff method");
  npoly->callback([&] {
    int p = np.p, q = np.q;
    if (np.n >= 0) {
      if (p >= 0 || q >= 0) {
        throw std::invalid_argument("give either n or --p/--q, not both");
      }
      p = q = np.n;
    } else if (p < 0 || q < 0) {
      throw std::invalid_argument("give n, or both --p and --q");
    }
    IntPoly result;
    if (np.method == "recursive") {
      result = n_poly_recursive(p, q);
    } else if (np.method == "closed") {
      if (p != q || p < 1) {
        throw std::invalid_argument("method 'closed' requires p == q >= 1");
      }
      result = n_poly_closed(p);
    } else {
      result = n_poly_symdiff(p, q, np.max_pairs);
    }
    print_poly(result, np.format,
               {{"command", "npoly"}, {"p", p}, {"q", q}, {"method", np.method}});
  });

  // ---- wpoly ----------------------------------------------------------
  struct {
    int p = 1;
    int q = 1;
    std::string format = "plain";
  } wp;
  auto* wpoly = app.add_subcommand(
      "wpoly", "numerator W_pq(t) of H_pq(1,t) = W_pq/(1-t)^(p+q-1)");
  wpoly->add_option("p", wp.p, "left composition length")
      ->required()
      ->check(CLI::PositiveNumber);
  wpoly->add_option("q", wp.q, "right composition length")
      ->required()
      ->check(CLI::PositiveNumber);
  wpoly->add_option("--format", wp.format, "plain | csv | json")
      ->check(CLI::IsMember(formats));
  wpoly->callback([&] {
    print_poly(w_poly(wp.p, wp.q), wp.format,
               {{"command", "wpoly"}, {"p", wp.p}, {"q", wp.q}});
  });

  // ---- expect ---------------------------------------------------------
  struct {
    long long s = 0;
    long long n = 1;
    int decimal = -1;
  } ex;
  auto* expect = app.add_subcommand(
      "expect", "expected EMD over uniform pairs from C(s,n), exact rational");
  expect->add_option("s", ex.s, "number of data points")
      ->required()
      ->check(CLI::NonNegativeNumber);
  expect->add_option("n", ex.n, "number of bins")
      ->required()
      ->check(CLI::PositiveNumber);
  expect->add_option("--decimal", ex.decimal, "append a rounded decimal");
  expect->callback([&] {
    if (ex.s < 0 || ex.n < 1) {
      throw std::invalid_argument("expect: need s >= 0 and n >= 1");
    }
    print_rational(expected_emd(ex.s, ex.n), ex.decimal);
  });

  // ---- limit ----------------------------------------------------------
  struct {
    long long n = 1;
    int decimal = -1;
  } li;
  auto* limit = app.add_subcommand(
      "limit", "L(n) = lim E[EMD]/s as s -> infinity, exact rational");
  limit->add_option("n", li.n, "number of bins")
      ->required()
      ->check(CLI::PositiveNumber);
  limit->add_option("--decimal", li.decimal, "append a rounded decimal");
  limit->callback([&] {
    if (li.n < 1) {
      throw std::invalid_argument("limit: need n >= 1");
    }
    print_rational(expected_emd_limit(li.n), li.decimal);
  });

  // ---- wiener ---------------------------------------------------------
  struct {
    long long a = 1;
    long long b = 1;
    bool brute = false;
    unsigned long long max_vertices = kDefaultMaxVertices;
  } wi;
  auto* wiener =
      app.add_subcommand("wiener", "Wiener index of the lattice Par(a x b)");
  wiener->add_option("a", wi.a, "rows")->required()->check(CLI::PositiveNumber);
  wiener->add_option("b", wi.b, "columns")->required()->check(CLI::PositiveNumber);
  wiener->add_flag("--brute", wi.brute,
                   "also run all-sources BFS and cross-check");
  wiener->add_option("--max-vertices", wi.max_vertices, "vertex cap for --brute");
  wiener->callback([&] {
    if (wi.a < 1 || wi.b < 1) {
      throw std::invalid_argument("wiener: need a >= 1 and b >= 1");
    }
    const BigInt formula = wiener_formula(wi.a, wi.b);
    if (wi.brute) {
      const BigInt bfs = wiener_bfs(build_hasse(
          {static_cast<int>(wi.a), static_cast<int>(wi.b)}, wi.max_vertices));
      if (bfs != formula) {
        throw std::logic_error("wiener: formula " + formula.str() +
                               " disagrees with BFS " + bfs.str());
      }
      std::cout << "formula=" << formula.str() << " bfs=" << bfs.str() << '\n';
    } else {
      std::cout << formula.str() << '\n';
    }
  });

  // ---- series ---------------------------------------------------------
  struct {
    int n = -1;
    int p = -1;
    int q = -1;
    int terms = 8;
    std::string kind = "emd-sum";
    std::string format = "plain";
  } se;
  auto* series = app.add_subcommand(
      "series", "series coefficients of the rational generating functions");
  series->add_option("n", se.n, "diagonal index (p = q = n)")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--p", se.p, "left composition length")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--q", se.q, "right composition length")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--terms", se.terms, "number of coefficients (from t^0)")
      ->check(CLI::PositiveNumber);
  series->add_option("--kind", se.kind,
                     "emd-sum: N_pq/(1-t)^(p+q); pair-count: W_pq/(1-t)^(p+q-1)")
      ->check(CLI::IsMember({"emd-sum", "pair-count"}));
  series->add_option("--format", se.format, "plain | csv | json")
      ->check(CLI::IsMember(formats));
  series->callback([&] {
    int p = se.p, q = se.q;
    if (se.n >= 0) {
      if (p >= 0 || q >= 0) {
        throw std::invalid_argument("give either n or --p/--q, not both");
      }
      p = q = se.n;
    } else if (p < 0 || q < 0) {
      throw std::invalid_argument("give n, or both --p and --q");
    }
    if (se.terms < 1) {
      throw std::invalid_argument("series: need --terms >= 1");
    }
    std::vector<BigInt> coeffs;
    if (se.kind == "emd-sum") {
      coeffs = series_expand(n_poly_recursive(p, q), p + q, se.terms);
    } else {
      coeffs = series_expand(w_poly(p, q), p + q - 1, se.terms);
    }
    print_series(coeffs, se.format,
                 {{"command", "series"},
                  {"p", p},
                  {"q", q},
                  {"kind", se.kind},
                  {"terms", se.terms}});
  });

  // ---- emd ------------------------------------------------------------
  struct {
    std::string alpha;
    std::string beta;
    bool cross_check = false;
  } em;
  auto* emd_cmd = app.add_subcommand(
      "emd", "EMD between two compositions given as comma-separated parts");
  emd_cmd->add_option("alpha", em.alpha, "e.g. 1,0,2")->required();
  emd_cmd->add_option("beta", em.beta, "e.g. 0,1,2")->required();
  emd_cmd->add_flag("--cross-check", em.cross_check,
                    "also compute through the partition bijection");
  emd_cmd->callback([&] {
    const Composition alpha = parse_composition(em.alpha);
    const Composition beta = parse_composition(em.beta);
    const long long direct = emd(alpha, beta);
    if (em.cross_check && direct != emd_via_bijection(alpha, beta)) {
      throw std::logic_error("emd: prefix-sum route disagrees with bijection");
    }
    std::cout << direct << '\n';
  });

  // ---- verify ---------------------------------------------------------
  struct {
    CheckOptions opts;
    std::vector<std::string> checks;
    std::string format = "plain";
  } ve;
  auto* verify = app.add_subcommand(
      "verify", "run verification sweeps; exit 0 iff every check passes");
  verify->add_option("--max-n", ve.opts.max_n, "polynomial index sweep bound");
  verify->add_option("--max-s", ve.opts.max_s, "data point sweep bound");
  verify->add_option("--checks", ve.checks, "subset of checks to run")
      ->delimiter(',');
  verify->add_option("--format", ve.format, "plain | csv | json")
      ->check(CLI::IsMember(formats));
  verify->add_option("--max-pairs", ve.opts.max_pairs, "brute-force pair cap");
  verify->add_option("--max-vertices", ve.opts.max_vertices,
                     "Hasse graph vertex cap");
  verify->callback([&] {
    std::vector<std::string> selected =
        ve.checks.empty() ? known_checks() : ve.checks;
    for (const std::string& name : selected) {
      const auto& known = known_checks();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw std::invalid_argument("unknown check '" + name + "'");
      }
    }
    std::vector<VerificationReport> reports;
    reports.reserve(selected.size());
    for (const std::string& name : selected) {
      reports.push_back(run_check(name, ve.opts));
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                return std::tie(a.check, a.params) < std::tie(b.check, b.params);
              });
    bool all_passed = true;
    if (ve.format == "csv") {
      std::cout << kReportCsvHeader << '\n';
      for (const auto& r : reports) {
        std::cout << report_to_csv_row(r) << '\n';
      }
    } else if (ve.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        arr.push_back(nlohmann::json::parse(report_to_json(r)));
      }
      std::cout << arr.dump() << '\n';
    } else {
      for (const auto& r : reports) {
        std::cout << report_to_plain(r) << '\n';
      }
    }
    for (const auto& r : reports) {
      all_passed = all_passed && r.passed;
    }
    if (ve.format == "plain") {
      std::cout << (all_passed ? "all checks passed" : "some checks FAILED")
                << '\n';
    }
    if (!all_passed) {
      exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
