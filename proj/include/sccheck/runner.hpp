#pragma once

#include <string>
#include <vector>

#include "sccheck/report.hpp"

namespace sccheck {

/* Every selectable check id: the registry rows plus the exact certificate
 * rows (wz_*). */
std::vector<std::string> all_check_ids();

/* Validates the config (ConfigError on any problem, before any computation),
 * expands parameter grids, runs every (check, prime) task plus the selected
 * certificate tasks across `jobs` workers, and aggregates deterministically:
 * results sorted by (check_id, p, params) whatever the completion order.
 *
 * The prime-independent certificate rows run once per suite (wz_pair on the
 * wz_grid, the product identities on half the grid); wz_telescoping runs at
 * the fixed primes {5,7,11,13,17,19} regardless of the prime range, since it
 * certifies the identity rather than sampling the range. fail_fast stops the
 * scheduling of new tasks after the first fail/precision_error; tasks already
 * underway still complete and report. */
Report run_suite(const SuiteConfig& cfg);

}  // namespace sccheck
