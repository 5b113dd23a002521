#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "emdpoly/report.hpp"

#include "json.hpp"

using namespace emdpoly;

TEST_CASE("json round-trip") {
  VerificationReport r;
  r.check = "palindromic";
  r.params = {{"max_n", 30}};
  r.passed = true;
  r.elapsed_ms = 12;
  CHECK(report_from_json(report_to_json(r)) == r);

  VerificationReport failing;
  failing.check = "conj-sum";
  failing.params = {{"max_n", 20}, {"subset_max_n", 10}};
  failing.passed = false;
  failing.counterexample = "n=3: values differ";
  failing.elapsed_ms = 7;
  CHECK(report_from_json(report_to_json(failing)) == failing);
}

TEST_CASE("json schema fields") {
  VerificationReport r;
  r.check = "unimodal";
  r.params = {{"max_n", 8}};
  r.passed = true;
  r.elapsed_ms = 3;
  const auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j.at("schema_version") == kReportSchemaVersion);
  CHECK(j.at("check") == "unimodal");
  CHECK(j.at("params").at("max_n") == 8);
  CHECK(j.at("status") == "pass");
  CHECK_FALSE(j.contains("counterexample"));
  CHECK(j.at("elapsed_ms") == 3);
}

TEST_CASE("bad json rejected") {
  CHECK_THROWS(report_from_json("{}"));
  CHECK_THROWS_AS(
      report_from_json(R"({"schema_version":2,"check":"x","params":{},)"
                       R"("status":"pass","elapsed_ms":0})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      report_from_json(R"({"schema_version":1,"check":"x","params":{},)"
                       R"("status":"maybe","elapsed_ms":0})"),
      std::invalid_argument);
}

TEST_CASE("plain and csv rendering") {
  VerificationReport r;
  r.check = "wiener-triple";
  r.params = {{"max_ab", 4}};
  r.passed = false;
  r.counterexample = "a=2,b=2";
  r.elapsed_ms = 5;
  CHECK(params_string(r.params) == "max_ab=4");
  CHECK(report_to_plain(r) ==
        "FAIL  wiener-triple  max_ab=4  counterexample: a=2,b=2  (5 ms)");
  CHECK(report_to_csv_row(r) == "wiener-triple,max_ab=4,fail,\"a=2,b=2\",5");
}

TEST_CASE("known checks are sorted and runnable") {
  const auto& names = known_checks();
  CHECK(names.size() == 9);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK_THROWS_AS(run_check("no-such-check", CheckOptions{}), std::invalid_argument);
}

TEST_CASE("every check passes at small ranges") {
  CheckOptions opts;
  opts.max_n = 5;
  opts.max_s = 3;
  for (const std::string& name : known_checks()) {
    CAPTURE(name);
    const VerificationReport r = run_check(name, opts);
    CHECK(r.check == name);
    CHECK(r.passed);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK_FALSE(r.params.empty());
  }
}
