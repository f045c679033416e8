#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sccheck/runner.hpp"

using namespace sccheck;

TEST_CASE("all_check_ids covers both registries") {
  auto ids = all_check_ids();
  CHECK(ids.size() == 50);
  auto has = [&](const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  CHECK(has("main_p5"));
  CHECK(has("conj22"));
  CHECK(has("wz_pair"));
  CHECK(has("wz_telescoping"));
}

TEST_CASE("config validation raises before running") {
  SuiteConfig cfg;
  cfg.prime_lo = 3;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.prime_lo = 50;
  cfg.prime_hi = 10;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.check_ids = {"nonexistent"};
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.jobs = 0;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.precision_slack = -1;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.wz_grid = 0;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.check_ids = {"main_p5"};
  cfg.param_overrides = {{"a", 1}};  // matches no selected check
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("small selected run") {
  SuiteConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 19;
  cfg.check_ids = {"wolstenholme_p3", "morley_p3"};
  Report r = run_suite(cfg);
  CHECK(r.results.size() == 12);
  CHECK(r.summary.pass == 12);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.skipped == 0);
  CHECK(r.summary.precision_error == 0);
  CHECK(exit_code_for(r) == 0);
  // deterministic order: (check_id, p)
  for (size_t i = 0; i + 1 < r.results.size(); ++i) {
    const auto& a = r.results[i];
    const auto& b = r.results[i + 1];
    CHECK(std::tie(a.check_id, a.p) <= std::tie(b.check_id, b.p));
  }
  CHECK(r.results.front().check_id == "morley_p3");
  CHECK(r.tool_version == kToolVersion);
}

TEST_CASE("certificate rows ignore the prime range") {
  SuiteConfig cfg;
  cfg.prime_lo = 29;
  cfg.prime_hi = 31;
  cfg.check_ids = {"wz_telescoping"};
  Report r = run_suite(cfg);
  REQUIRE(r.results.size() == 6);
  std::vector<uint32_t> ps;
  for (const auto& row : r.results) {
    ps.push_back(row.p);
    CHECK(row.modulus == "exact");
    CHECK(row.status == CheckStatus::pass);
  }
  CHECK(ps == std::vector<uint32_t>{5, 7, 11, 13, 17, 19});

  cfg.check_ids = {"wz_pair"};
  cfg.wz_grid = 12;
  r = run_suite(cfg);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].p == 0);
  CHECK(r.results[0].modulus == "exact");
  CHECK(r.results[0].status == CheckStatus::pass);
}

TEST_CASE("parameter overrides restrict grids") {
  SuiteConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 19;
  cfg.check_ids = {"mhs_half_a"};
  cfg.param_overrides = {{"a", 2}};
  Report r = run_suite(cfg);
  CHECK(r.results.size() == 6);
  for (const auto& row : r.results) CHECK(row.params.str() == "a=2");
}

TEST_CASE("empty run renders the canonical empty report") {
  SuiteConfig cfg;
  cfg.prime_lo = 24;
  cfg.prime_hi = 28;  // no primes in range
  cfg.check_ids = {"main_p5"};
  cfg.format = ReportFormat::json;
  Report r = run_suite(cfg);
  CHECK(r.results.empty());

  auto doc = nlohmann::json::parse(render_report(r, ReportFormat::json));
  CHECK(doc["version"] == 1);
  CHECK(doc["results"].is_array());
  CHECK(doc["results"].empty());
  CHECK(doc["summary"]["pass"] == 0);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["summary"]["skipped"] == 0);
  CHECK(doc["summary"]["precision_error"] == 0);
}

TEST_CASE("csv header is stable") {
  SuiteConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 7;
  cfg.check_ids = {"eq34_p"};
  Report r = run_suite(cfg);
  std::string csv = render_report(r, ReportFormat::csv);
  CHECK(csv.rfind("check_id,p,params,modulus,lhs,rhs,status,duration_ms\n",
                  0) == 0);
  // one header plus one line per result
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(r.results.size()) + 1);
}

TEST_CASE("json carries the full result schema") {
  SuiteConfig cfg;
  cfg.prime_lo = 11;
  cfg.prime_hi = 11;
  cfg.check_ids = {"mhs_full_ar"};
  cfg.param_overrides = {{"a", 1}, {"r", 2}};
  Report r = run_suite(cfg);
  auto doc = nlohmann::json::parse(render_report(r, ReportFormat::json));
  REQUIRE(doc["results"].size() == 1);
  const auto& row = doc["results"][0];
  CHECK(row["check_id"] == "mhs_full_ar");
  CHECK(row["p"] == 11);
  CHECK(row["params"] == "a=1,r=2");
  CHECK(row["status"] == "pass");
  CHECK(row.contains("modulus"));
  CHECK(row.contains("lhs"));
  CHECK(row.contains("rhs"));
  CHECK(row.contains("duration_ms"));
  CHECK(doc["config"]["prime_lo"] == 11);
  CHECK(doc["summary"]["pass"] == 1);
}

TEST_CASE("identical reports from 1 and 8 workers") {
  SuiteConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 31;
  cfg.wz_grid = 12;
  cfg.jobs = 1;
  Report one = run_suite(cfg);
  cfg.jobs = 8;
  Report eight = run_suite(cfg);
  CHECK(render_report(one, ReportFormat::json, true) ==
        render_report(eight, ReportFormat::json, true));
  CHECK(render_report(one, ReportFormat::csv, true) ==
        render_report(eight, ReportFormat::csv, true));
  CHECK(one.summary.fail == 0);
  CHECK(one.summary.precision_error == 0);
}

TEST_CASE("exit code mapping") {
  Report r;
  r.summary.pass = 3;
  CHECK(exit_code_for(r) == 0);
  r.summary.fail = 1;
  CHECK(exit_code_for(r) == 1);
  r.summary.fail = 0;
  r.summary.precision_error = 2;
  CHECK(exit_code_for(r) == 1);
  r.summary.precision_error = 0;
  r.summary.skipped = 5;
  CHECK(exit_code_for(r) == 0);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("table") == ReportFormat::table);
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  CHECK(to_string(ReportFormat::json) == "json");
}

TEST_CASE("table render mentions outcomes and summary") {
  SuiteConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 7;
  cfg.check_ids = {"main_p5", "conj22"};
  Report r = run_suite(cfg);
  std::string table = render_report(r, ReportFormat::table);
  CHECK(table.find("ok") != std::string::npos);
  CHECK(table.find("summary") != std::string::npos);
  CHECK(table.find("conjecture") != std::string::npos);
}
