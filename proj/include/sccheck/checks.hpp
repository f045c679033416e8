#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sccheck/binomial_sums.hpp"
#include "sccheck/harmonic.hpp"
#include "sccheck/padic.hpp"
#include "sccheck/special_numbers.hpp"

namespace sccheck {

enum class CheckStatus { pass, fail, skipped, precision_error };
std::string to_string(CheckStatus s);

enum class CheckKind { theorem, conjecture };

/* Small named integer parameters (a, r, b, m), rendered canonically sorted:
 * "a=1,r=2". */
class CheckParams {
 public:
  CheckParams() = default;
  CheckParams(std::initializer_list<std::pair<const std::string, int>> init)
      : kv_(init) {}
  bool empty() const { return kv_.empty(); }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  int get(const std::string& key) const;  // DomainError if absent
  void set(const std::string& key, int value) { kv_[key] = value; }
  const std::map<std::string, int>& entries() const { return kv_; }
  std::string str() const;
  bool operator==(const CheckParams& o) const { return kv_ == o.kv_; }
  bool operator<(const CheckParams& o) const { return kv_ < o.kv_; }

 private:
  std::map<std::string, int> kv_;
};

struct CheckResult {
  std::string check_id;
  uint32_t p = 0;  // 0 on prime-independent certificate rows
  CheckParams params;
  std::string modulus;  // decimal p^k, or "exact" for certificate rows
  std::string lhs, rhs; // base-10 residues; empty when skipped/undecided
  CheckStatus status = CheckStatus::skipped;
  long duration_ms = 0;
};

/* Per-prime shared scratch: special constants, prefix streams, the rational
 * weights w_k and the G column sum, each cached per relative precision. Lazy
 * and single-threaded; workers own one context per prime. */
class CheckContext {
 public:
  explicit CheckContext(uint32_t p, int slack = 2, long conj_budget = 2000);

  uint32_t p() const { return p_; }
  int s() const { return s_; }          // (p-1)/2
  int slack() const { return slack_; }
  long budget() const { return budget_; }
  int sign() const { return sign_; }    // (-1)^((p-1)/2)

  const SpecialValues& special();
  const PrefixStreams& streams(int e);  // H, H(2;.), inverses up to p-1
  /* w_k = (p/2 - k)/((p+1-2k)(p+2k)), index 1..(p-1)/2 ([0] unused). */
  const std::vector<CappedPadic>& weights(int e);
  const CappedPadic& q(int e);          // q_p(2) at relative precision e
  CappedPadic bern(int index);          // B_index mod p (absolute precision 1)
  CappedPadic euler();                  // E_{p-3} mod p (absolute precision 1)
  const CappedPadic& gsum(int e);       // sum_{k<=s} G((p+1)/2, k)

 private:
  uint32_t p_;
  int s_;
  int slack_;
  long budget_;
  int sign_;
  std::optional<SpecialValues> sv_;
  std::map<int, PrefixStreams> streams_;
  std::map<int, std::vector<CappedPadic>> weights_;
  std::map<int, CappedPadic> q_, gsum_;
};

/* Outcome of one evaluation: the two sides as capped values. Overrides carry
 * the rendering when residues at the row modulus cannot express the miss
 * (only the conj22 valuation assertion uses them). */
struct RowOutcome {
  bool pass = false;
  CappedPadic lhs, rhs;
  std::string lhs_override, rhs_override;
};

struct CheckDefinition {
  std::string id;
  std::string statement;  // the congruence itself, ASCII math
  CheckKind kind = CheckKind::theorem;
  std::vector<CheckParams> default_grid;  // {{}} for parameterless rows
  std::function<int(const CheckParams&)> modulus_exponent;
  /* False -> the row is reported skipped for this prime (never fail). */
  std::function<bool(uint32_t p, const CheckParams&, long budget)> admits;
  std::function<RowOutcome(CheckContext&, const CheckParams&)> eval;
};

const std::vector<CheckDefinition>& registry();
const CheckDefinition* find_check(const std::string& id);  // null if unknown

/* Prime-independent certificate rows; execution lives with the runner. */
struct WzCheckInfo {
  std::string id;
  std::string statement;
};
const std::vector<WzCheckInfo>& wz_registry();

/* Evaluate one registry row at one prime. Throws DomainError for an unknown
 * id or a non-prime/too-small p; computational precision shortfalls become
 * status precision_error, never an exception. */
CheckResult run_check(const std::string& id, uint32_t p,
                      const CheckParams& params = {}, int slack = 2);
CheckResult run_check_with(CheckContext& ctx, const CheckDefinition& def,
                           const CheckParams& params);

/* Conjecture instance at odd m >= 1: forms
 *   D = sum_{n<=(pm-1)/2} (6n+1)/256^n C(2n,n)^3
 *       - (-1)^((p-1)/2) p sum_{r<=(m-1)/2} (6r+1)/256^r C(2r,r)^3,
 * asserts v_p(D) >= 4(1 + v_p(m)) (shortfall is a genuine fail, reported as
 * D against 0), then compares D * 16^(m-1)/((pm)^4 C(m-1,(m-1)/2)^3) to
 * (-1)^((p-1)/2) (7/24) B_{p-3} mod p. Skipped when (pm-1)/2 > budget. */
CheckResult run_conjecture22(uint32_t p, int m, int slack = 2,
                             long budget = 2000);

/* Partial sum of sum_{n>=0} (6n+1)/256^n C(2n,n)^3 = 4/pi through n = terms,
 * evaluated exactly then rounded once; error is the absolute gap to 4/pi. */
struct RamanujanSanity {
  double value = 0;
  double error = 0;
};
RamanujanSanity ramanujan_sanity(int terms);

}  // namespace sccheck
