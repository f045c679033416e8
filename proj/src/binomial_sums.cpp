#include "sccheck/binomial_sums.hpp"

namespace sccheck {

BigInt binom_exact(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative upper argument");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

CappedPadic div_exact(const CappedPadic& a, const CappedPadic& b) {
  if (b.is_zero()) throw DomainError("division by zero value");
  int t = b.valuation();
  if (t == 0) return a * b.invert();
  CappedPadic bu = b.div_exact_p(t);  // unit part of b
  return (a * bu.invert()).div_exact_p(t);
}

CentralBinomStream::CentralBinomStream(uint32_t p, int e, int n_max) {
  if (n_max < 0) throw DomainError("negative stream bound");
  c_.reserve(static_cast<size_t>(n_max) + 1);
  c_.push_back(CappedPadic::one(p, e));
  for (int n = 0; n < n_max; ++n) {
    CappedPadic num = CappedPadic::from_integer(2L * (2 * n + 1), p, e);
    CappedPadic den = CappedPadic::from_integer(static_cast<long>(n) + 1, p, e);
    c_.push_back(div_exact(c_.back() * num, den));
  }
}

namespace {

CappedPadic weighted_cube_sum(uint32_t p, int e, int upper, long wa, long wb,
                              long base) {
  // sum_{n=0}^{upper} (wa*n + wb)/base^n * C(2n,n)^3
  CentralBinomStream stream(p, e, upper);
  CappedPadic invb = CappedPadic::from_integer(base, p, e).invert();
  CappedPadic acc = CappedPadic::exact_zero(p);
  CappedPadic w = CappedPadic::one(p, e);
  for (int n = 0; n <= upper; ++n) {
    const CappedPadic& c = stream.at(n);
    CappedPadic term = CappedPadic::from_integer(wa * n + wb, p, e) * c * c * c * w;
    acc = acc + term;
    w = w * invb;
  }
  return acc;
}

BigRational weighted_cube_sum_exact(int upper, long wa, long wb, long base) {
  BigRational acc(0);
  BigInt c(1);  // C(2n,n), advanced exactly
  BigInt pw(1);
  for (int n = 0; n <= upper; ++n) {
    acc += make_rational(BigInt(wa * n + wb) * c * c * c, pw);
    c = c * (2 * (2 * n + 1));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
    pw *= base;
  }
  return acc;
}

}  // namespace

CappedPadic sum_256(uint32_t p, int e, int upper) {
  return weighted_cube_sum(p, e, upper, 6, 1, 256);
}

BigRational sum_256_exact(int upper) { return weighted_cube_sum_exact(upper, 6, 1, 256); }

CappedPadic sum_16(uint32_t p, int e) {
  return weighted_cube_sum(p, e, static_cast<int>(p) - 1, 3, 1, 16);
}

BigRational sum_16_exact(int upper) { return weighted_cube_sum_exact(upper, 3, 1, 16); }

BigRational rising_factorial(const BigRational& x, int k) {
  if (k < 0) throw DomainError("negative rising factorial length");
  BigRational r(1);
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

CappedPadic rising_factorial_mod(const BigRational& x, int k, uint32_t p, int e) {
  if (k < 0) throw DomainError("negative rising factorial length");
  CappedPadic r = CappedPadic::one(p, e);
  for (int i = 0; i < k; ++i)
    r = r * CappedPadic::from_rational(x + i, p, e);
  return r;
}

BigRational F_eval(WzPoint pt) {
  long n = pt.n, k = pt.k;
  if (n < 0 || k < 0) throw DomainError("negative WZ point");
  if (n < k) return BigRational(0);
  BigInt num = BigInt(6 * n - 2 * k + 1) * binom_exact(2 * n, n) *
               binom_exact(2 * n + 2 * k, n + k) * binom_exact(2 * n - 2 * k, n - k) *
               binom_exact(n + k, n);
  BigInt den = prime_power(2, static_cast<int>(8 * n - 2 * k)) * binom_exact(2 * k, k);
  return make_rational(num, den);
}

BigRational G_eval(WzPoint pt) {
  long n = pt.n, k = pt.k;
  if (n < 0 || k < 0) throw DomainError("negative WZ point");
  if (n < k || n == 0) return BigRational(0);
  BigInt num = BigInt(n) * n * binom_exact(2 * n, n) * binom_exact(2 * n + 2 * k, n + k) *
               binom_exact(2 * n - 2 * k, n - k) * binom_exact(n + k, n);
  BigInt den = prime_power(2, static_cast<int>(8 * n - 2 * k - 4)) *
               BigInt(2 * n + 2 * k - 1) * binom_exact(2 * k, k);
  return make_rational(num, den);
}

namespace {

CappedPadic reduce_int(const BigInt& x, uint32_t p, int e) {
  return CappedPadic::from_integer(x, p, e);
}

}  // namespace

CappedPadic F_mod(WzPoint pt, uint32_t p, int e) {
  long n = pt.n, k = pt.k;
  if (n < 0 || k < 0) throw DomainError("negative WZ point");
  if (n < k) return CappedPadic::exact_zero(p);
  CappedPadic num = reduce_int(BigInt(6 * n - 2 * k + 1), p, e) *
                    reduce_int(binom_exact(2 * n, n), p, e) *
                    reduce_int(binom_exact(2 * n + 2 * k, n + k), p, e) *
                    reduce_int(binom_exact(2 * n - 2 * k, n - k), p, e) *
                    reduce_int(binom_exact(n + k, n), p, e);
  CappedPadic den = reduce_int(prime_power(2, static_cast<int>(8 * n - 2 * k)), p, e) *
                    reduce_int(binom_exact(2 * k, k), p, e);
  return div_exact(num, den);
}

CappedPadic G_mod(WzPoint pt, uint32_t p, int e) {
  long n = pt.n, k = pt.k;
  if (n < 0 || k < 0) throw DomainError("negative WZ point");
  if (n < k || n == 0) return CappedPadic::exact_zero(p);
  CappedPadic num = reduce_int(BigInt(n) * n, p, e) *
                    reduce_int(binom_exact(2 * n, n), p, e) *
                    reduce_int(binom_exact(2 * n + 2 * k, n + k), p, e) *
                    reduce_int(binom_exact(2 * n - 2 * k, n - k), p, e) *
                    reduce_int(binom_exact(n + k, n), p, e);
  CappedPadic den = reduce_int(prime_power(2, static_cast<int>(8 * n - 2 * k - 4)), p, e) *
                    reduce_int(BigInt(2 * n + 2 * k - 1), p, e) *
                    reduce_int(binom_exact(2 * k, k), p, e);
  return div_exact(num, den);
}

CappedPadic F_half_half(uint32_t p, int e) {
  long s = (static_cast<long>(p) - 1) / 2;
  CappedPadic num = reduce_int(BigInt(p), p, e) *
                    reduce_int(binom_exact(2 * p - 1, p - 1), p, e) *
                    reduce_int(binom_exact(p - 1, s), p, e);
  CappedPadic den = reduce_int(prime_power(2, static_cast<int>(3 * p - 3)), p, e);
  return div_exact(num, den);
}

}  // namespace sccheck
