#include "emdpoly/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace emdpoly {

std::string params_string(const std::map<std::string, long long>& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) os << ';';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["check"] = r.check;
  j["params"] = nlohmann::json::object();
  for (const auto& [key, value] : r.params) {
    j["params"][key] = value;
  }
  j["status"] = r.passed ? "pass" : "fail";
  if (r.counterexample) {
    j["counterexample"] = *r.counterexample;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

VerificationReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
    throw std::invalid_argument("report_from_json: unsupported schema_version");
  }
  VerificationReport r;
  r.check = j.at("check").get<std::string>();
  for (const auto& [key, value] : j.at("params").items()) {
    r.params[key] = value.get<long long>();
  }
  const std::string status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") {
    throw std::invalid_argument("report_from_json: bad status '" + status + "'");
  }
  r.passed = status == "pass";
  if (j.contains("counterexample")) {
    r.counterexample = j.at("counterexample").get<std::string>();
  }
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  return r;
}

std::string report_to_plain(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "pass" : "FAIL") << "  " << r.check << "  "
     << params_string(r.params);
  if (r.counterexample) {
    os << "  counterexample: " << *r.counterexample;
  }
  os << "  (" << r.elapsed_ms << " ms)";
  return os.str();
}

namespace {

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << r.check << ',' << params_string(r.params) << ','
     << (r.passed ? "pass" : "fail") << ','
     << csv_quote(r.counterexample.value_or("")) << ',' << r.elapsed_ms;
  return os.str();
}

}  // namespace emdpoly
