#pragma once

#include <cstdint>
#include <vector>

#include "sccheck/padic.hpp"

namespace sccheck {

struct WzPoint {
  int n = 0;
  int k = 0;
};

/* Exact binomial; n >= 0 required, k outside [0, n] yields 0. */
BigInt binom_exact(long n, long k);

/* Division a/b valid whenever the quotient is p-integral (v(a) >= v(b)). */
CappedPadic div_exact(const CappedPadic& a, const CappedPadic& b);

/* C(2n,n) mod p^(v+e) for n = 0..n_max via the ratio recurrence
 * c_{n+1} = c_n * 2(2n+1)/(n+1). Valuation-aware: the recurrence may cross
 * multiples of p in either the multiplier (valuation up) or divisor
 * (valuation down), so n_max beyond p is supported. */
class CentralBinomStream {
 public:
  CentralBinomStream(uint32_t p, int e, int n_max);
  const CappedPadic& at(int n) const { return c_.at(static_cast<size_t>(n)); }
  int limit() const { return static_cast<int>(c_.size()) - 1; }

 private:
  std::vector<CappedPadic> c_;
};

/* sum_{n=0}^{upper} (6n+1)/256^n * C(2n,n)^3 at relative precision e. */
CappedPadic sum_256(uint32_t p, int e, int upper);
/* Exact-rational route for the same sum (oracle). */
BigRational sum_256_exact(int upper);

/* sum_{n=0}^{p-1} (3n+1)/16^n * C(2n,n)^3 at relative precision e. */
CappedPadic sum_16(uint32_t p, int e);
BigRational sum_16_exact(int upper);

/* Rising factorial (x)_k = x(x+1)...(x+k-1), exact and reduced twins.
 * The reduced twin rejects factors with negative p-valuation. */
BigRational rising_factorial(const BigRational& x, int k);
CappedPadic rising_factorial_mod(const BigRational& x, int k, uint32_t p, int e);

/* The WZ pair. Both vanish for n < k.
 *   F(n,k) = (6n-2k+1)/2^{8n-2k} * C(2n,n)C(2n+2k,n+k)C(2n-2k,n-k)C(n+k,n)/C(2k,k)
 *   G(n,k) = n^2 C(2n,n)C(2n+2k,n+k)C(2n-2k,n-k)C(n+k,n)
 *            / (2^{8n-2k-4} (2n+2k-1) C(2k,k))                                */
BigRational F_eval(WzPoint pt);
BigRational G_eval(WzPoint pt);
CappedPadic F_mod(WzPoint pt, uint32_t p, int e);
CappedPadic G_mod(WzPoint pt, uint32_t p, int e);

/* F((p-1)/2,(p-1)/2) = p * C(2p-1,p-1) * C(p-1,(p-1)/2) / 2^{3p-3}, reduced. */
CappedPadic F_half_half(uint32_t p, int e);

}  // namespace sccheck
