#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sccheck {

using BigInt = mpz_class;
using BigRational = mpq_class;

/* Comparison or division that cannot be decided at the precision carried.
 * Distinct from a congruence being false. */
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Domain violation: inverting a non-unit, negative valuation, division that
 * is not provably exact, malformed construction. */
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt prime_power(uint32_t p, int e);

/* Canonical rational: reduced, denominator > 0. Throws DomainError on den == 0. */
BigRational make_rational(const BigInt& num, const BigInt& den);

/* v_p of a nonzero rational (may be negative). */
int rational_valuation(const BigRational& r, uint32_t p);

/* A p-adic value with capped precision: p^v * u with p ∤ u, u in [0, p^e),
 * carried to absolute precision v + e (the value is known mod p^{v+e}).
 * A value that vanishes to the carried precision is "zero at precision A":
 * known to be ≡ 0 mod p^A, nothing beyond. from_integer/from_rational of 0
 * produce an exact zero (A effectively infinite).
 *
 * Invariants: e >= 1, v >= 0, u a unit in [1, p^e). Relative precision never
 * increases through arithmetic; add/sub re-extract the valuation of the
 * result, capped at the surviving absolute precision. */
class CappedPadic {
 public:
  CappedPadic() = default;  // invalid placeholder; assign before use

  static CappedPadic from_integer(const BigInt& x, uint32_t p, int e);
  static CappedPadic from_integer(long x, uint32_t p, int e);
  /* Value known only as a residue mod p^abs (absolute precision abs). */
  static CappedPadic from_residue(const BigInt& r, uint32_t p, int abs);
  static CappedPadic from_rational(const BigRational& r, uint32_t p, int e);
  static CappedPadic exact_zero(uint32_t p);
  static CappedPadic one(uint32_t p, int e);

  uint32_t prime() const { return p_; }
  bool is_zero() const { return zero_; }
  /* Exact valuation of a nonzero value; throws DomainError on zero. */
  int valuation() const;
  int rel_prec() const;   // e (nonzero values only)
  int abs_prec() const;   // v + e, or the vanishing exponent for zeros
  const BigInt& unit() const;

  CappedPadic operator-() const;
  friend CappedPadic operator+(const CappedPadic& a, const CappedPadic& b);
  friend CappedPadic operator-(const CappedPadic& a, const CappedPadic& b);
  friend CappedPadic operator*(const CappedPadic& a, const CappedPadic& b);

  /* Multiplicative inverse; requires valuation 0 (use div_exact_p first). */
  CappedPadic invert() const;
  CappedPadic pow(unsigned long n) const;
  /* Divide by p^t when the value is provably divisible (v >= t, or zero known
   * mod at least p^{t+1}); otherwise DomainError / PrecisionError. */
  CappedPadic div_exact_p(int t) const;

  /* Canonical representative in [0, p^k); requires abs_prec() >= k. */
  BigInt residue(int k) const;

  std::string str() const;

  /* True iff a ≡ b (mod p^k). Requires absolute precision >= k on both sides;
   * insufficient precision raises PrecisionError, never returns false. */
  friend bool congruent(const CappedPadic& a, const CappedPadic& b, int k);

 private:
  BigInt residue_mod(int k) const;  // value mod p^k, k <= abs_prec

  uint32_t p_ = 0;
  bool zero_ = false;
  int v_ = 0;
  int e_ = 0;
  int zero_abs_ = 0;  // zeros only: exponent to which the value is known 0
  BigInt u_;
};

bool congruent(const CappedPadic& a, const CappedPadic& b, int k);

}  // namespace sccheck
