#include "sccheck/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "sccheck/wz.hpp"

namespace sccheck {

namespace {

constexpr uint32_t kTelescopingPrimes[] = {5, 7, 11, 13, 17, 19};

struct RowInstance {
  const CheckDefinition* def;
  CheckParams params;
};

/* One schedulable unit: either every selected registry row at one prime
 * (sharing a context), or one certificate check. */
struct Task {
  uint32_t p = 0;                        // prime tasks only
  const std::vector<RowInstance>* rows = nullptr;
  std::string wz_id;                     // certificate tasks only
  uint32_t wz_p = 0;                     // wz_telescoping only
};

std::string rational_str(const BigRational& x) {
  return BigRational(x).get_str();
}

CheckResult wz_result(const std::string& id, uint32_t p, const WzOutcome& o,
                      long duration_ms) {
  CheckResult res;
  res.check_id = id;
  res.p = p;
  res.modulus = "exact";
  res.lhs = rational_str(o.lhs);
  res.rhs = rational_str(o.rhs);
  res.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
  res.duration_ms = duration_ms;
  return res;
}

std::vector<CheckResult> run_task(const Task& task, const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  if (task.rows != nullptr) {
    CheckContext ctx(task.p, cfg.precision_slack, cfg.conj_budget);
    out.reserve(task.rows->size());
    for (const auto& inst : *task.rows)
      out.push_back(run_check_with(ctx, *inst.def, inst.params));
    return out;
  }
  const auto t0 = std::chrono::steady_clock::now();
  WzOutcome o;
  if (task.wz_id == "wz_pair") {
    o = verify_wz_pair(cfg.wz_grid);
  } else if (task.wz_id == "wz_pochhammer") {
    o = verify_pochhammer_identities(cfg.wz_grid / 2, cfg.wz_grid / 2);
  } else if (task.wz_id == "wz_g_rewrite") {
    o = verify_g_rewrite(cfg.wz_grid / 2, cfg.wz_grid / 2);
  } else {
    o = verify_telescoping(task.wz_p);
  }
  const auto t1 = std::chrono::steady_clock::now();
  const long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  out.push_back(wz_result(task.wz_id, task.wz_p, o, ms));
  return out;
}

bool worse_than_skip(CheckStatus s) {
  return s == CheckStatus::fail || s == CheckStatus::precision_error;
}

}  // namespace

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  for (const auto& w : wz_registry()) ids.push_back(w.id);
  return ids;
}

Report run_suite(const SuiteConfig& cfg) {
  if (cfg.prime_lo < 5) throw ConfigError("prime_lo must be >= 5");
  if (cfg.prime_lo > cfg.prime_hi)
    throw ConfigError("prime_lo must not exceed prime_hi");
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (cfg.precision_slack < 0)
    throw ConfigError("precision_slack must be >= 0");
  if (cfg.wz_grid < 1) throw ConfigError("wz_grid must be >= 1");
  if (cfg.conj_budget < 0) throw ConfigError("conj_budget must be >= 0");

  // Resolve the selection.
  std::vector<const CheckDefinition*> selected;
  std::vector<std::string> selected_wz;
  if (cfg.check_ids.empty()) {
    for (const auto& d : registry()) selected.push_back(&d);
    for (const auto& w : wz_registry()) selected_wz.push_back(w.id);
  } else {
    std::set<std::string> seen;
    for (const auto& id : cfg.check_ids) {
      if (!seen.insert(id).second) continue;
      if (const CheckDefinition* def = find_check(id)) {
        selected.push_back(def);
        continue;
      }
      bool is_wz = false;
      for (const auto& w : wz_registry()) is_wz = is_wz || (w.id == id);
      if (!is_wz) throw ConfigError("unknown check id: " + id);
      selected_wz.push_back(id);
    }
  }

  // Expand parameter grids under the overrides; every override key must
  // apply to at least one selected row.
  std::set<std::string> used_keys;
  std::vector<RowInstance> rows;
  for (const CheckDefinition* def : selected) {
    for (const auto& grid_params : def->default_grid) {
      bool keep = true;
      for (const auto& [key, value] : cfg.param_overrides) {
        if (!grid_params.empty() && grid_params.has(key)) {
          used_keys.insert(key);
          if (grid_params.get(key) != value) keep = false;
        }
      }
      if (keep) rows.push_back(RowInstance{def, grid_params});
    }
  }
  for (const auto& [key, value] : cfg.param_overrides) {
    (void)value;
    if (used_keys.count(key) == 0)
      throw ConfigError("parameter override matches no selected check: " +
                        key);
  }

  const std::vector<uint32_t> primes =
      primes_in_range(cfg.prime_lo, cfg.prime_hi);

  std::vector<Task> tasks;
  for (uint32_t p : primes) {
    if (rows.empty()) break;
    Task t;
    t.p = p;
    t.rows = &rows;
    tasks.push_back(t);
  }
  for (const auto& id : selected_wz) {
    if (id == "wz_telescoping") {
      for (uint32_t p : kTelescopingPrimes) {
        Task t;
        t.wz_id = id;
        t.wz_p = p;
        tasks.push_back(t);
      }
    } else {
      Task t;
      t.wz_id = id;
      tasks.push_back(t);
    }
  }

  const auto wall0 = std::chrono::steady_clock::now();
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (cfg.fail_fast && stop.load()) continue;
      slots[i] = run_task(tasks[i], cfg);
      if (cfg.fail_fast)
        for (const auto& res : slots[i])
          if (worse_than_skip(res.status)) stop.store(true);
    }
  };

  const int nworkers =
      std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nworkers));
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report report;
  report.tool_version = kToolVersion;
  report.config = cfg;
  for (auto& slot : slots)
    for (auto& res : slot) report.results.push_back(std::move(res));
  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              if (a.check_id != b.check_id) return a.check_id < b.check_id;
              if (a.p != b.p) return a.p < b.p;
              return a.params < b.params;
            });

  for (const auto& res : report.results) {
    switch (res.status) {
      case CheckStatus::pass: ++report.summary.pass; break;
      case CheckStatus::fail: ++report.summary.fail; break;
      case CheckStatus::skipped: ++report.summary.skipped; break;
      case CheckStatus::precision_error:
        ++report.summary.precision_error;
        break;
    }
    if (res.status == CheckStatus::fail) {
      const CheckDefinition* def = find_check(res.check_id);
      if (def != nullptr && def->kind == CheckKind::conjecture)
        ++report.summary.conjecture_fail;
    }
  }
  const auto wall1 = std::chrono::steady_clock::now();
  report.summary.wall_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(wall1 - wall0)
          .count());
  return report;
}

}  // namespace sccheck
