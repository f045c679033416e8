#include "sccheck/wz.hpp"

#include <gmp.h>

#include <sstream>

namespace sccheck {

namespace {

std::string point(int n, int k) {
  std::ostringstream os;
  os << "n=" << n << ",k=" << k;
  return os.str();
}

BigRational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(f);
}

BigRational pow2(long e) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return BigRational(t);
}

WzOutcome record(bool pass, int n, int k, BigRational lhs, BigRational rhs) {
  WzOutcome out;
  out.pass = pass;
  out.where = point(n, k);
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace

WzOutcome verify_wz_pair(int n_max) {
  WzOutcome out;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 1; k <= n_max; ++k) {
      BigRational lhs = F_eval({n, k - 1}) - F_eval({n, k});
      BigRational rhs = G_eval({n + 1, k}) - G_eval({n, k});
      if (lhs != rhs) return record(false, n, k, lhs, rhs);
      out = record(true, n, k, lhs, rhs);
    }
  }
  return out;
}

WzOutcome verify_telescoping(uint32_t p) {
  const int s = static_cast<int>((p - 1) / 2);

  // Column sums first: each must close to a single G value.
  for (int k = 1; k <= s; ++k) {
    BigRational col = 0;
    for (int n = 0; n <= s; ++n) col += F_eval({n, k - 1}) - F_eval({n, k});
    BigRational g = G_eval({s + 1, k});
    if (col != g) return record(false, s + 1, k, col, g);
  }

  BigRational lhs = 0;
  for (int n = 0; n <= s; ++n) lhs += F_eval({n, 0});
  BigRational rhs = F_eval({s, s});
  for (int k = 1; k <= s; ++k) rhs += G_eval({s + 1, k});
  return record(lhs == rhs, s, s, lhs, rhs);
}

WzOutcome verify_pochhammer_identities(int n_max, int k_max) {
  const BigRational half(1, 2);
  WzOutcome out;

  for (int m = 0; m <= n_max + k_max; ++m) {
    BigRational lhs = rising_factorial(half, m) / factorial(m);
    BigRational rhs = BigRational(binom_exact(2L * m, m)) / pow2(2L * m);
    if (lhs != rhs) return record(false, m, 0, lhs, rhs);
    out = record(true, m, 0, lhs, rhs);
  }

  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      BigRational lhs = rising_factorial(half, n + k);
      BigRational rhs =
          rising_factorial(half, n) * rising_factorial(half + n, k);
      if (lhs != rhs) return record(false, n, k, lhs, rhs);
      out = record(true, n, k, lhs, rhs);
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigRational lhs = rising_factorial(half, n - k) *
                        rising_factorial(half + (n - k), k - 1);
      BigRational rhs = rising_factorial(half, n - 1);
      if (lhs != rhs) return record(false, n, k, lhs, rhs);
      out = record(true, n, k, lhs, rhs);
    }
  }
  return out;
}

WzOutcome verify_g_rewrite(int n_max, int k_max) {
  const BigRational half(1, 2);
  WzOutcome out;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n && k <= k_max; ++k) {
      BigRational lhs = G_eval({n, k});
      BigRational num = BigRational(n) * BigRational(binom_exact(2L * n, n)) *
                        BigRational(binom_exact(2L * n, n)) *
                        BigRational(binom_exact(2L * n - 2, n - 1)) *
                        rising_factorial(half + n, k) *
                        BigRational(binom_exact(n, k));
      BigRational den = pow2(8L * n - 6 - 2 * k) *
                        rising_factorial(half + (n - k), k - 1) *
                        BigRational(2L * n + 2 * k - 1) *
                        BigRational(binom_exact(2L * k, k));
      BigRational rhs = num / den;
      if (lhs != rhs) return record(false, n, k, lhs, rhs);
      out = record(true, n, k, lhs, rhs);
    }
  }
  return out;
}

}  // namespace sccheck
