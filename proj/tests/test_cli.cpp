#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "emdpoly/report.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the installed CLI through the shell, capturing both streams.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string err_path = "/tmp/emdpoly_cli_err_" + std::to_string(getpid()) +
                               "_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      env + (env.empty() ? "" : " ") + EMDPOLY_CLI_PATH + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err_file(err_path);
  std::stringstream err_stream;
  err_stream << err_file.rdbuf();
  result.err = err_stream.str();
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("npoly plain output") {
  CHECK(run_cli("npoly 4").out == "20 56 20\n");
  CHECK(run_cli("npoly 4").exit_code == 0);
  CHECK(run_cli("npoly 1").out == "0\n");
  CHECK(run_cli("npoly 7").out == "112 1456 4576 4576 1456 112\n");
  CHECK(run_cli("npoly --p 2 --q 3").out == "5 3\n");
  CHECK(run_cli("npoly --p 2 --q 3 --method symdiff").out ==
        run_cli("npoly --p 2 --q 3").out);
  CHECK(run_cli("npoly 3 --method closed").out == "8 8\n");
  CHECK(run_cli("npoly 5 --method symdiff").out == run_cli("npoly 5").out);
}

TEST_CASE("npoly csv and json") {
  CHECK(run_cli("npoly 4 --format csv").out ==
        "degree,coefficient\n1,20\n2,56\n3,20\n");
  const auto r = run_cli("npoly 4 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "npoly");
  CHECK(j.at("p") == 4);
  CHECK(j.at("q") == 4);
  CHECK(j.at("method") == "recursive");
  CHECK(j.at("low_degree") == 1);
  CHECK(j.at("degree") == 3);
  CHECK(j.at("coeffs") == nlohmann::json({"20", "56", "20"}));
  // zero polynomial: null degrees, empty coefficient list
  const auto z = nlohmann::json::parse(run_cli("npoly 1 --format json").out);
  CHECK(z.at("low_degree").is_null());
  CHECK(z.at("coeffs").empty());
}

TEST_CASE("npoly usage errors") {
  CHECK(run_cli("npoly --p 2 --q 3 --method closed").exit_code == 2);
  CHECK_FALSE(run_cli("npoly --p 2 --q 3 --method closed").err.empty());
  CHECK(run_cli("npoly 4 --p 2 --q 2").exit_code == 2);
  CHECK(run_cli("npoly --p 2").exit_code == 2);
  CHECK(run_cli("npoly 4 --method sideways").exit_code == 2);
  CHECK(run_cli("npoly").exit_code == 2);
}

TEST_CASE("npoly cap exceeded exits 3") {
  const auto r = run_cli("npoly --p 20 --q 20 --method symdiff --max-pairs 100");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("wpoly") {
  CHECK(run_cli("wpoly 4 4").out == "1 9 9 1\n");
  CHECK(run_cli("wpoly 1 9").out == "1\n");
  CHECK(run_cli("wpoly 0 2").exit_code == 2);
}

TEST_CASE("expect") {
  CHECK(run_cli("expect 2 2").out == "8/9\n");
  CHECK(run_cli("expect 0 5").out == "0\n");
  CHECK(run_cli("expect 1 2 --decimal 3").out == "1/2 (0.500)\n");
  CHECK(run_cli("expect 2 0").exit_code == 2);
}

TEST_CASE("limit") {
  CHECK(run_cli("limit 2").out == "1/3\n");
  CHECK(run_cli("limit 1").out == "0\n");
  CHECK(run_cli("limit 3 --decimal 4").out == "8/15 (0.5333)\n");
  CHECK(run_cli("limit 0").exit_code == 2);
}

TEST_CASE("wiener") {
  CHECK(run_cli("wiener 2 2").out == "56\n");
  CHECK(run_cli("wiener 1 3").out == "20\n");
  CHECK(run_cli("wiener 1 1 --brute").out == "formula=2 bfs=2\n");
  CHECK(run_cli("wiener 0 2").exit_code == 2);
  CHECK(run_cli("wiener 200 200 --brute").exit_code == 3);
}

TEST_CASE("series") {
  CHECK(run_cli("series 3 --terms 3").out == "0 8 56\n");
  CHECK(run_cli("series 2 --terms 3 --kind pair-count").out == "1 4 9\n");
  CHECK(run_cli("series --p 1 --q 2 --terms 4").out == "0 1 3 6\n");
  CHECK(run_cli("series 2 --terms 0").exit_code == 2);
}

TEST_CASE("emd") {
  CHECK(run_cli("emd 1,0 0,1").out == "1\n");
  CHECK(run_cli("emd 3,0,0 0,0,3 --cross-check").out == "6\n");
  CHECK(run_cli("emd 1,0 1,0,0").exit_code == 2);
  CHECK(run_cli("emd 2,0 1,0").exit_code == 2);
  CHECK(run_cli("emd 1,x 0,1").exit_code == 2);
}

TEST_CASE("verify single check") {
  const auto r = run_cli("verify --max-n 6 --checks palindromic");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pass  palindromic  max_n=6") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify rejects unknown checks") {
  const auto r = run_cli("verify --checks no-such-suite");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("unknown check") != std::string::npos);
}

TEST_CASE("verify json output round-trips") {
  const auto r = run_cli(
      "verify --max-n 4 --max-s 2 --checks palindromic,conj-sum --format json");
  REQUIRE(r.exit_code == 0);
  const auto arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  // reports come back sorted by check name
  CHECK(arr[0].at("check") == "conj-sum");
  CHECK(arr[1].at("check") == "palindromic");
  for (const auto& item : arr) {
    CHECK(item.at("schema_version") == 1);
    CHECK(item.at("status") == "pass");
    const auto parsed = emdpoly::report_from_json(item.dump());
    CHECK(parsed.passed);
  }
}

TEST_CASE("verify csv output") {
  const auto r = run_cli("verify --max-n 4 --checks unimodal --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("check,params,status,counterexample,elapsed_ms\n", 0) == 0);
  CHECK(r.out.find("unimodal,max_n=4,pass,\"\",") != std::string::npos);
}

TEST_CASE("verify full default sweep passes") {
  const auto r = run_cli("verify --max-n 5 --max-s 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  CHECK(run_cli("npoly 6").out == run_cli("npoly 6").out);
  CHECK(run_cli("expect 5 3").out == run_cli("expect 5 3").out);
  // json verify: equal after zeroing the wall-time field
  auto scrub = [](const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    for (auto& item : arr) {
      item["elapsed_ms"] = 0;
    }
    return arr;
  };
  const auto a = run_cli("verify --max-n 4 --checks palindromic,unimodal --format json");
  const auto b = run_cli("verify --max-n 4 --checks palindromic,unimodal --format json");
  CHECK(scrub(a.out) == scrub(b.out));
}

TEST_CASE("diagnostics go to stderr, results to stdout") {
  const auto quiet = run_cli("verify --max-n 4 --checks unimodal");
  CHECK(quiet.err.empty());
  const auto chatty = run_cli("verify --max-n 4 --checks unimodal", "LOG_LEVEL=info");
  CHECK(chatty.err.find("[info] running check unimodal") != std::string::npos);
  CHECK(chatty.out == quiet.out);
}

TEST_CASE("help and usage") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("npoly 4 --no-such-flag").exit_code == 2);
}
