#pragma once

#include <cstdint>
#include <string>

#include "sccheck/binomial_sums.hpp"
#include "sccheck/padic.hpp"

namespace sccheck {

/* Result of an exact-rational certificate check. On failure `where` names the
 * first offending grid point and lhs/rhs hold its two sides; on success they
 * hold the last point evaluated. */
struct WzOutcome {
  bool pass = false;
  std::string where;
  BigRational lhs, rhs;
};

/* Certifies F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k) on 0<=n<=n_max, 1<=k<=n_max,
 * in exact rational arithmetic.
 *
 * This grid check is a complete certificate, not a sample: divide the identity
 * by the common factor C(2n,n)C(2n+2k,n+k)C(2n-2k,n-k)C(n+k,n)/(2^{8n-2k}C(2k,k));
 * each of the four terms becomes a rational function of (n,k) built from the
 * consecutive-argument binomial ratios, with numerator and denominator degree
 * at most 13 in each variable. Cleared of denominators it is a polynomial
 * identity of degree <= 13 per variable on the region n >= k, and the grid
 * supplies more than 14 distinct evaluation points in each variable there, so
 * agreement on the grid forces the polynomial identity to hold everywhere. */
WzOutcome verify_wz_pair(int n_max);

/* Certifies, exactly, the telescoped identity at one prime:
 *   sum_{n=0}^{(p-1)/2} F(n,0)
 *     == F((p-1)/2,(p-1)/2) + sum_{k=1}^{(p-1)/2} G((p+1)/2,k)
 * including every per-column identity
 *   sum_{n=0}^{(p-1)/2} [F(n,k-1) - F(n,k)] == G((p+1)/2,k).              */
WzOutcome verify_telescoping(uint32_t p);

/* Certifies three half-integer Pochhammer identities on the grid:
 *   (1/2)_{m}/m! == C(2m,m)/4^m                  for m <= n_max + k_max
 *   (1/2)_{n+k} == (1/2)_n (1/2+n)_k             for n <= n_max, k <= k_max
 *   (1/2)_{n-k} (1/2+n-k)_{k-1} == (1/2)_{n-1}   for 1 <= k <= n <= n_max  */
WzOutcome verify_pochhammer_identities(int n_max, int k_max);

/* Certifies the closed rewrite of G used downstream:
 *   G(n,k) == n C(2n,n)^2 C(2n-2,n-1) (1/2+n)_k C(n,k)
 *             / (2^{8n-6-2k} (1/2+n-k)_{k-1} (2n+2k-1) C(2k,k))
 * for 1 <= k <= min(n, k_max), 1 <= n <= n_max, exactly. The n^2 n!(n-1)!
 * arising from the two Pochhammer-to-binomial conversions cancels against
 * the n!^2 of the central binomials, leaving the single factor n.         */
WzOutcome verify_g_rewrite(int n_max, int k_max);

}  // namespace sccheck
