#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sccheck/runner.hpp"
#include "sccheck/special_numbers.hpp"
#include "sccheck/wz.hpp"

namespace {

using namespace sccheck;

void parse_prime_range(const std::string& text, int64_t& lo, int64_t& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw ConfigError("--primes expects LO..HI, got: " + text);
  try {
    lo = std::stoll(text.substr(0, pos));
    hi = std::stoll(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw ConfigError("--primes expects integers LO..HI, got: " + text);
  }
}

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("--params expects k=v pairs, got: " + item);
    try {
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--params expects integer values, got: " + item);
    }
  }
  return out;
}

std::vector<std::string> parse_checks(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty() || text == "all") return out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const Report& report, const SuiteConfig& cfg) {
  const std::string text = render_report(report, cfg.format);
  if (!cfg.output_path.empty()) {
    std::ofstream f(cfg.output_path);
    if (!f) throw ConfigError("cannot open output file: " + cfg.output_path);
    f << text;
    if (!cfg.quiet)
      std::cout << "report written to " << cfg.output_path << " (pass="
                << report.summary.pass << " fail=" << report.summary.fail
                << " skipped=" << report.summary.skipped
                << " precision_error=" << report.summary.precision_error
                << ")\n";
    return;
  }
  if (cfg.quiet && cfg.format == ReportFormat::table) {
    std::ostringstream os;
    os << "summary: pass=" << report.summary.pass
       << " fail=" << report.summary.fail
       << " skipped=" << report.summary.skipped
       << " precision_error=" << report.summary.precision_error << '\n';
    std::cout << os.str();
    return;
  }
  std::cout << text;
}

int cmd_run(const SuiteConfig& cfg) {
  Report report = run_suite(cfg);
  emit(report, cfg);
  return exit_code_for(report);
}

int cmd_list_checks() {
  for (const auto& d : registry()) {
    std::cout << d.id;
    if (d.kind == CheckKind::conjecture) std::cout << "  [conjecture]";
    if (d.default_grid.size() > 1)
      std::cout << "  (" << d.default_grid.size() << " parameter sets)";
    std::cout << "\n    " << d.statement << "\n";
  }
  for (const auto& w : wz_registry())
    std::cout << w.id << "  [exact certificate]\n    " << w.statement << "\n";
  return 0;
}

void print_wz(const std::string& name, const WzOutcome& o) {
  std::cout << name << ": " << (o.pass ? "ok" : "FAIL") << " (last point "
            << o.where << ")\n";
  if (!o.pass)
    std::cout << "  lhs=" << o.lhs.get_str() << "\n  rhs=" << o.rhs.get_str()
              << "\n";
}

int cmd_wz(int nmax) {
  if (nmax < 1) throw ConfigError("--nmax must be >= 1");
  bool ok = true;
  WzOutcome o = verify_wz_pair(nmax);
  ok = ok && o.pass;
  print_wz("wz_pair", o);
  o = verify_pochhammer_identities(nmax / 2, nmax / 2);
  ok = ok && o.pass;
  print_wz("wz_pochhammer", o);
  o = verify_g_rewrite(nmax / 2, nmax / 2);
  ok = ok && o.pass;
  print_wz("wz_g_rewrite", o);
  for (uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u}) {
    o = verify_telescoping(p);
    ok = ok && o.pass;
    print_wz("wz_telescoping p=" + std::to_string(p), o);
  }
  return ok ? 0 : 1;
}

int cmd_oracle(int64_t p) {
  if (p < 5 || !is_prime(static_cast<uint64_t>(p)))
    throw ConfigError("--p must be a prime >= 5");
  const auto sv = SpecialValues::compute(static_cast<uint32_t>(p), 3);
  std::cout << "p = " << p << "\n"
            << "B_{p-3} mod p   = " << sv.bernoulli_p3
            << "  (recurrence and power-sum routes agree)\n"
            << "E_{p-3} mod p   = " << sv.euler_p3 << "\n"
            << "q_p(2) mod p^3  = " << sv.fermat_q2.residue(3).get_str()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sccheck: exact and p-adic verification of central binomial "
               "supercongruences"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run the check suite");
  std::string primes = "5..499";
  std::string checks = "all";
  std::string params;
  std::string format = "table";
  SuiteConfig cfg;
  run->add_option("--primes", primes, "prime range LO..HI (default 5..499)");
  run->add_option("--checks", checks,
                  "all, or comma-separated check ids (see list-checks)");
  run->add_option("--params", params,
                  "k=v,... restriction of parametric grids");
  run->add_option("--precision-slack", cfg.precision_slack,
                  "extra p-adic digits beyond each row's modulus (default 2)");
  run->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
  run->add_option("--format", format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  run->add_option("--out", cfg.output_path, "write the report to a file");
  run->add_flag("--fail-fast", cfg.fail_fast,
                "stop scheduling after the first fail/precision_error");
  run->add_flag("--quiet", cfg.quiet, "print the summary line only (table)");
  run->add_option("--wz-grid", cfg.wz_grid,
                  "certificate grid size (default 40)");
  run->add_option("--conj-budget", cfg.conj_budget,
                  "largest admitted (p*m-1)/2 for conj22 (default 2000)");

  auto* list = app.add_subcommand("list-checks", "print the check registry");

  auto* wz = app.add_subcommand("wz", "run the exact certificate checks only");
  int nmax = 40;
  wz->add_option("--nmax", nmax, "pair grid size (default 40)");

  auto* oracle =
      app.add_subcommand("oracle", "print B_{p-3}, E_{p-3}, q_p(2) for one p");
  int64_t oracle_p = 0;
  oracle->add_option("--p", oracle_p, "prime >= 5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      parse_prime_range(primes, cfg.prime_lo, cfg.prime_hi);
      cfg.check_ids = parse_checks(checks);
      cfg.param_overrides = parse_params(params);
      cfg.format = parse_format(format);
      return cmd_run(cfg);
    }
    if (*list) return cmd_list_checks();
    if (*wz) return cmd_wz(nmax);
    if (*oracle) return cmd_oracle(oracle_p);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
