#pragma once

#include <cstdint>
#include <vector>

#include "sccheck/padic.hpp"

namespace sccheck {

std::vector<uint32_t> primes_in_range(int64_t lo, int64_t hi);
bool is_prime(uint64_t n);

/* Full table B_0..B_{p-3} mod p from the defining recurrence
 * sum_{j<=n} binom(n+1,j) B_j = 0; O(p^2) word operations. All divisions are
 * by units (von Staudt-Clausen never bites below index p-1). */
std::vector<uint64_t> bernoulli_table_mod_p(uint32_t p);

/* B_{p-3} mod p via the recurrence table. */
uint64_t bernoulli_p3_recurrence(uint32_t p);

/* Independent route: sum_{a=1}^{p-1} a^{p-3} == p * B_{p-3} (mod p^2),
 * so one exact division by p recovers B_{p-3} mod p. Valid from p = 5: the
 * only other surviving Faulhaber term is p^{p-2}/(p-2), zero mod p^2. */
uint64_t bernoulli_p3_powersum(uint32_t p);

/* E_{p-3} mod p from the integer recurrence sum_k binom(2n,2k) E_{2k} = 0. */
uint64_t euler_p3(uint32_t p);

/* q_p(2) = (2^{p-1} - 1)/p as a capped value at relative precision e. */
CappedPadic fermat_quotient2(uint32_t p, int e);

/* Per-prime bundle used by the checks; the two Bernoulli routes are
 * cross-checked at construction. Immutable after compute(). */
struct SpecialValues {
  uint32_t p = 0;
  uint64_t bernoulli_p3 = 0;          // B_{p-3} mod p
  uint64_t euler_p3 = 0;              // E_{p-3} mod p
  CappedPadic fermat_q2;              // q_p(2)
  std::vector<uint64_t> bernoulli;    // B_j mod p for j = 0..p-3

  static SpecialValues compute(uint32_t p, int q_precision);
  /* B_index mod p, 0 <= index <= p-3. */
  uint64_t bernoulli_at(int index) const;
};

}  // namespace sccheck
