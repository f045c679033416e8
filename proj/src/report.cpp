#include "sccheck/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace sccheck {

const char* const kToolVersion = "1.0.0";

ReportFormat parse_format(const std::string& name) {
  if (name == "table") return ReportFormat::table;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw ConfigError("unknown format: " + name);
}

std::string to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::table: return "table";
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
  }
  return "?";
}

int exit_code_for(const Report& r) {
  return (r.summary.fail > 0 || r.summary.precision_error > 0) ? 1 : 0;
}

namespace {

bool is_conjecture_row(const std::string& check_id) {
  const CheckDefinition* def = find_check(check_id);
  return def != nullptr && def->kind == CheckKind::conjecture;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const Report& r, bool strip_volatile) {
  std::ostringstream os;
  os << "check_id,p,params,modulus,lhs,rhs,status,duration_ms\n";
  for (const auto& res : r.results) {
    os << csv_field(res.check_id) << ',' << res.p << ','
       << csv_field(res.params.str()) << ',' << csv_field(res.modulus) << ','
       << csv_field(res.lhs) << ',' << csv_field(res.rhs) << ','
       << to_string(res.status) << ',';
    if (!strip_volatile) os << res.duration_ms;
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json config_json(const SuiteConfig& c, bool strip_volatile) {
  nlohmann::ordered_json j;
  j["prime_lo"] = c.prime_lo;
  j["prime_hi"] = c.prime_hi;
  if (c.check_ids.empty())
    j["checks"] = "all";
  else
    j["checks"] = c.check_ids;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.param_overrides) j["params"][k] = v;
  j["precision_slack"] = c.precision_slack;
  if (!strip_volatile) j["jobs"] = c.jobs;
  j["format"] = to_string(c.format);
  j["out"] = c.output_path;
  j["fail_fast"] = c.fail_fast;
  j["wz_grid"] = c.wz_grid;
  j["conj_budget"] = c.conj_budget;
  return j;
}

std::string render_json(const Report& r, bool strip_volatile) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["tool_version"] = r.tool_version;
  j["config"] = config_json(r.config, strip_volatile);
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& res : r.results) {
    nlohmann::ordered_json o;
    o["check_id"] = res.check_id;
    o["p"] = res.p;
    o["params"] = res.params.str();
    o["modulus"] = res.modulus;
    o["lhs"] = res.lhs;
    o["rhs"] = res.rhs;
    o["status"] = to_string(res.status);
    if (!strip_volatile) o["duration_ms"] = res.duration_ms;
    j["results"].push_back(std::move(o));
  }
  j["summary"]["pass"] = r.summary.pass;
  j["summary"]["fail"] = r.summary.fail;
  j["summary"]["skipped"] = r.summary.skipped;
  j["summary"]["precision_error"] = r.summary.precision_error;
  j["summary"]["conjecture_fail"] = r.summary.conjecture_fail;
  if (!strip_volatile) j["summary"]["wall_ms"] = r.summary.wall_ms;
  return j.dump(2) + "\n";
}

std::string status_glyph(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "ok";
    case CheckStatus::fail: return "FAIL <!>";
    case CheckStatus::skipped: return "skip";
    case CheckStatus::precision_error: return "PREC <!>";
  }
  return "?";
}

std::string render_table(const Report& r, bool strip_volatile) {
  size_t wid = 8, wpar = 6, wmod = 7;
  for (const auto& res : r.results) {
    wid = std::max(wid, res.check_id.size());
    wpar = std::max(wpar, res.params.str().size());
    wmod = std::max(wmod, res.modulus.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wid)) << "check_id" << "  "
     << std::right << std::setw(6) << "p" << "  " << std::left
     << std::setw(static_cast<int>(wpar)) << "params" << "  "
     << std::setw(static_cast<int>(wmod)) << "modulus" << "  "
     << std::setw(10) << "status" << "  " << "ms" << '\n';
  for (const auto& res : r.results) {
    os << std::left << std::setw(static_cast<int>(wid)) << res.check_id
       << "  " << std::right << std::setw(6) << res.p << "  " << std::left
       << std::setw(static_cast<int>(wpar)) << res.params.str() << "  "
       << std::setw(static_cast<int>(wmod)) << res.modulus << "  "
       << std::setw(10) << status_glyph(res.status) << "  ";
    if (!strip_volatile) os << res.duration_ms;
    if (is_conjecture_row(res.check_id)) os << "  [conjecture]";
    os << '\n';
    if (res.status == CheckStatus::fail) {
      os << "    lhs=" << res.lhs << '\n';
      os << "    rhs=" << res.rhs << '\n';
    }
  }
  os << "summary: pass=" << r.summary.pass << " fail=" << r.summary.fail
     << " skipped=" << r.summary.skipped
     << " precision_error=" << r.summary.precision_error;
  if (r.summary.conjecture_fail > 0)
    os << " (conjecture instances failing: " << r.summary.conjecture_fail
       << ", reportable findings rather than verification defects)";
  if (!strip_volatile) os << " wall_ms=" << r.summary.wall_ms;
  os << '\n';
  return os.str();
}

}  // namespace

std::string render_report(const Report& r, ReportFormat f,
                          bool strip_volatile) {
  switch (f) {
    case ReportFormat::json: return render_json(r, strip_volatile);
    case ReportFormat::csv: return render_csv(r, strip_volatile);
    case ReportFormat::table: return render_table(r, strip_volatile);
  }
  return "";
}

}  // namespace sccheck
