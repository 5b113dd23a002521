#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emdpoly/caps.hpp"

namespace emdpoly {

inline constexpr int kReportSchemaVersion = 1;

// Outcome of one verification sweep.  counterexample is present iff the
// check failed; elapsed_ms is excluded from golden comparisons.
struct VerificationReport {
  std::string check;
  std::map<std::string, long long> params;
  bool passed = false;
  std::optional<std::string> counterexample;
  long long elapsed_ms = 0;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

// Stable JSON schema:
//   {schema_version, check, params, status, counterexample?, elapsed_ms}
std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

// "max_n=8;max_s=5" (keys in map order, i.e. sorted).
std::string params_string(const std::map<std::string, long long>& params);

std::string report_to_plain(const VerificationReport& r);

inline constexpr const char* kReportCsvHeader =
    "check,params,status,counterexample,elapsed_ms";
std::string report_to_csv_row(const VerificationReport& r);

struct CheckOptions {
  int max_n = 8;
  long long max_s = 5;
  unsigned long long max_pairs = kDefaultMaxPairs;
  unsigned long long max_vertices = kDefaultMaxVertices;
};

// Check names accepted by run_check, sorted.
const std::vector<std::string>& known_checks();

// Runs one named verification sweep.  Throws std::invalid_argument for an
// unknown name; CapExceeded propagates when the requested ranges do not fit
// under the caps.
VerificationReport run_check(const std::string& name, const CheckOptions& opts);

}  // namespace emdpoly
