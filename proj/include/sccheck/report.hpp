#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sccheck/checks.hpp"

namespace sccheck {

/* Invalid configuration or usage; callers map this to exit code 2. */
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { table, json, csv };
ReportFormat parse_format(const std::string& name);  // ConfigError if unknown
std::string to_string(ReportFormat f);

struct SuiteConfig {
  int64_t prime_lo = 5;
  int64_t prime_hi = 499;
  std::vector<std::string> check_ids;         // empty selects every check
  std::map<std::string, int> param_overrides; // restricts parametric grids
  int precision_slack = 2;
  int jobs = 1;
  ReportFormat format = ReportFormat::table;
  std::string output_path;                    // empty writes to stdout
  bool fail_fast = false;
  int wz_grid = 40;      // pair grid size; product identities use half of it
  long conj_budget = 2000;  // largest admitted (pm-1)/2 for conj22
  bool quiet = false;
};

struct Summary {
  long pass = 0;
  long fail = 0;
  long skipped = 0;
  long precision_error = 0;
  long conjecture_fail = 0;  // subset of fail coming from conjecture rows
  long wall_ms = 0;
};

struct Report {
  std::string tool_version;
  SuiteConfig config;
  std::vector<CheckResult> results;
  Summary summary;
};

/* Render in the requested format. strip_volatile removes the fields that
 * legitimately differ between reruns of one config (durations, wall time,
 * worker count), leaving a byte-comparable determinism projection. */
std::string render_report(const Report& r, ReportFormat f,
                          bool strip_volatile = false);

/* 0 when nothing failed and nothing was undecided, else 1. */
int exit_code_for(const Report& r);

extern const char* const kToolVersion;

}  // namespace sccheck
