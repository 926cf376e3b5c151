#include "extremal/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace extremal;
using namespace extremal::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("run_verification produces passing records") {
  auto recs = run_verification(RunConfig{});
  CHECK(recs.size() == 18);
  for (const auto& r : recs) {
    INFO(r.name);
    CHECK(r.pass);
    CHECK(r.abs_error <= r.tolerance);
  }
}

TEST_CASE("verify exits 0 and the fault hook exits 1") {
  Run ok = run({"verify"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  Run bad = run({"verify", "--inject-coefficient-fault", "--format", "json"});
  CHECK(bad.code == kExitFailure);
  auto j = nlohmann::json::parse(bad.out);
  bool identity_failed = false, others_pass = true;
  for (const auto& r : j) {
    if (r["name"] == "closed_form_identity_residual_terms") identity_failed = !r["pass"].get<bool>();
    else if (r["name"] != "garbled_coefficient_beta4_alpha_delta") others_pass = others_pass && r["pass"].get<bool>();
  }
  CHECK(identity_failed);
  CHECK(others_pass);
}

TEST_CASE("verify JSON schema") {
  Run r = run({"--format", "json", "verify"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 18);
  for (const auto& rec : j) {
    CHECK(rec.size() == 6);
    CHECK(rec["name"].is_string());
    CHECK(rec["expected"].is_string());
    CHECK(rec["computed"].is_string());
    CHECK(rec["abs_error"].is_number());
    CHECK(rec["tolerance"].is_number());
    CHECK(rec["pass"].is_boolean());
  }
  CHECK(j[0]["name"] == "closed_form_identity_residual_terms");
}

TEST_CASE("verify CSV") {
  Run r = run({"verify", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("name,expected,computed,abs_error,tolerance,pass\n", 0) == 0);
  CHECK(count_lines(r.out) == 19);
}

TEST_CASE("energy subcommand") {
  Run a = run({"energy", "--k", "3", "--alpha", "1", "--beta", "1", "--delta", "0", "--format", "json"});
  REQUIRE(a.code == kExitOk);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["normalized"]["exact"] == "2");
  CHECK(j["futaki_term"]["exact_pi2"] == "0");
  CHECK(j["average_term"]["exact_pi2"] == "192");
  CHECK(j["closed_form_agrees"] == true);

  Run b = run({"energy", "--k", "2", "--beta", "1", "--delta", "1"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("973/409") != std::string::npos);

  Run c = run({"energy", "--k", "1", "--alpha", "1", "--delta", "1/2", "--format", "csv"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.rfind("quantity,exact,value\n", 0) == 0);

  CHECK(run({"energy", "--k", "3", "--alpha", "1", "--beta", "0", "--delta", "1"}).code == kExitUsage);
  CHECK(run({"energy", "--k", "3", "--alpha", "1", "--beta", "1", "--delta", "-1"}).code == kExitUsage);
  CHECK(run({"energy", "--k", "2", "--alpha", "1", "--beta", "1", "--delta", "1"}).code == kExitUsage);
  CHECK(run({"energy", "--alpha", "x"}).code == kExitUsage);
  CHECK(run({"energy", "--k", "4"}).code == kExitUsage);
}

TEST_CASE("critical subcommand") {
  Run one = run({"critical", "--k", "1", "--format", "json"});
  REQUIRE(one.code == kExitOk);
  auto j = nlohmann::json::parse(one.out);
  CHECK(j["variable"] == "x");
  CHECK(j["root"] == "2.18393340447");
  CHECK(j["sturm_count"] == 1);
  CHECK(j["classification"] == "local-min");
  CHECK(j["line_to_exceptional_ratio"] == "3.18393340447");
  CHECK(j["two_chi_plus_three_tau"] == 8);

  Run two = run({"critical", "--k", "2"});
  CHECK(two.code == kExitOk);
  CHECK(two.out.find("0.957712805") != std::string::npos);
  CHECK(two.out.find("7.1364744") != std::string::npos);

  Run csv = run({"critical", "--k", "2", "--format", "csv", "--digits", "20"});
  CHECK(csv.code == kExitOk);
  CHECK(count_lines(csv.out) == 2);

  Run three = run({"critical", "--k", "3"});
  CHECK(three.code == kExitUsage);
  CHECK(three.err.find("scan3") != std::string::npos);
  CHECK(run({"critical"}).code == kExitUsage);
  CHECK(run({"critical", "--k", "1", "--digits", "3"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"verify", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("scan3 CSV output") {
  auto dir = std::filesystem::temp_directory_path() / "extremal_cli_test";
  std::filesystem::create_directories(dir);
  auto p1 = dir / "a.csv", p2 = dir / "b.csv";

  auto start = std::chrono::steady_clock::now();
  Run a = run({"scan3", "--grid", "10", "--format", "csv", "--out", p1.string()});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(a.code == kExitOk);
  CHECK(secs < 5.0);
  CHECK(a.out.find("global minimum") != std::string::npos);
  std::string body = slurp(p1);
  CHECK(body.rfind("alpha,delta,value,grad_norm\n", 0) == 0);
  CHECK(count_lines(body) == 101);

  Run b = run({"scan3", "--grid", "10", "--format", "csv", "--out", p2.string()});
  REQUIRE(b.code == kExitOk);
  CHECK(slurp(p2) == body);

  Run stdout_csv = run({"scan3", "--grid", "10", "--format", "csv"});
  CHECK(stdout_csv.out == body);

  std::filesystem::remove_all(dir);
}

TEST_CASE("scan3 JSON output") {
  Run s = run({"scan3", "--grid", "12", "--format", "json"});
  REQUIRE(s.code == kExitOk);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["alpha_count"] == 12);
  CHECK(j["global_min"]["on_boundary"] == true);
  CHECK(j["interior_critical_points"] == 0);

  auto path = std::filesystem::temp_directory_path() / "extremal_cli_scan.json";
  Run f = run({"scan3", "--grid", "6", "--format", "json", "--out", path.string()});
  REQUIRE(f.code == kExitOk);
  auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["cells"].size() == 36);
  std::filesystem::remove(path);
}

TEST_CASE("scan3 rejects bad input") {
  CHECK(run({"scan3", "--grid", "1"}).code == kExitUsage);
  CHECK(run({"scan3", "--alpha-min", "0"}).code == kExitUsage);
  CHECK(run({"scan3", "--grid", "4", "--alpha-min", "5", "--alpha-max", "2"}).code == kExitUsage);
  CHECK(run({"scan3", "--grid", "4", "--format", "csv", "--out", "/nonexistent-dir/x.csv"}).code == kExitUsage);
  CHECK(run({"verify", "--out", "/nonexistent-dir/x.txt"}).code == kExitUsage);
}
