#include "sccheck/harmonic.hpp"

#include <cstdlib>

namespace sccheck {

MhsIndex::MhsIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw DomainError("empty MHS index");
  for (int a : exps_)
    if (a == 0) throw DomainError("MHS index entries must be nonzero");
}

int MhsIndex::weight() const {
  int w = 0;
  for (int a : exps_) w += std::abs(a);
  return w;
}

BigRational mhs_exact(const MhsIndex& idx, int n) {
  if (n < 0) throw DomainError("negative range");
  if (n > 60) throw DomainError("brute-force range capped at 60");
  int m = idx.depth();
  const std::vector<int>& a = idx.exponents();
  BigRational total(0);
  if (n < m) return total;
  // odometer over strictly increasing tuples k_1 < ... < k_m <= n
  std::vector<int> k(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) k[static_cast<size_t>(i)] = i + 1;
  while (true) {
    BigRational term(1);
    for (int i = 0; i < m; ++i) {
      int ki = k[static_cast<size_t>(i)];
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(ki),
                    static_cast<unsigned long>(std::abs(a[static_cast<size_t>(i)])));
      int sgn = (a[static_cast<size_t>(i)] < 0 && (ki & 1)) ? -1 : 1;
      term *= make_rational(sgn, den);
    }
    total += term;
    int i = m - 1;
    while (i >= 0 && k[static_cast<size_t>(i)] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++k[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j) k[static_cast<size_t>(j)] = k[static_cast<size_t>(j - 1)] + 1;
  }
  return total;
}

std::vector<CappedPadic> batch_inverses(uint32_t p, int e, int n) {
  if (n >= static_cast<int>(p)) throw DomainError("inverse table requires n < p");
  BigInt m = prime_power(p, e);
  std::vector<BigInt> prefix(static_cast<size_t>(n) + 1);
  prefix[0] = 1;
  for (int i = 1; i <= n; ++i) prefix[static_cast<size_t>(i)] = prefix[static_cast<size_t>(i - 1)] * i % m;
  BigInt run;
  if (!mpz_invert(run.get_mpz_t(), prefix[static_cast<size_t>(n)].get_mpz_t(), m.get_mpz_t()))
    throw DomainError("batch inversion hit a non-unit");
  std::vector<CappedPadic> inv(static_cast<size_t>(n) + 1);
  inv[0] = CappedPadic::exact_zero(p);  // unused slot
  for (int i = n; i >= 1; --i) {
    BigInt v = run * prefix[static_cast<size_t>(i - 1)] % m;
    inv[static_cast<size_t>(i)] = CappedPadic::from_integer(v, p, e);
    run = run * i % m;
  }
  return inv;
}

CappedPadic mhs_mod(const MhsIndex& idx, int n, uint32_t p, int e) {
  if (n < 0) throw DomainError("negative range");
  if (n >= static_cast<int>(p)) throw DomainError("mhs_mod requires n < p");
  int m = idx.depth();
  const std::vector<int>& a = idx.exponents();
  if (n < m) return CappedPadic::exact_zero(p);
  std::vector<CappedPadic> inv = batch_inverses(p, e, n);
  // T[j] accumulates depth-j partial sums over parts <= current k.
  std::vector<CappedPadic> T(static_cast<size_t>(m) + 1, CappedPadic::exact_zero(p));
  CappedPadic onev = CappedPadic::one(p, e);
  for (int k = 1; k <= n; ++k) {
    // descending j: T[j-1] has only parts < k when depth j absorbs part k
    for (int j = m; j >= 1; --j) {
      const CappedPadic& prev = (j == 1) ? onev : T[static_cast<size_t>(j - 1)];
      int aj = a[static_cast<size_t>(j - 1)];
      CappedPadic f = inv[static_cast<size_t>(k)].pow(static_cast<unsigned long>(std::abs(aj)));
      if (aj < 0 && (k & 1)) f = -f;
      T[static_cast<size_t>(j)] = T[static_cast<size_t>(j)] + prev * f;
    }
  }
  return T[static_cast<size_t>(m)];
}

CappedPadic odd_harmonic(int n, uint32_t p, int e) {
  if (n < 0) throw DomainError("negative range");
  if (2 * n - 1 >= static_cast<int>(p)) throw DomainError("odd_harmonic requires 2n-1 < p");
  std::vector<CappedPadic> inv = batch_inverses(p, e, std::max(1, 2 * n - 1));
  CappedPadic s = CappedPadic::exact_zero(p);
  for (int k = 1; k <= n; ++k) s = s + inv[static_cast<size_t>(2 * k - 1)];
  return s;
}

PrefixStreams::PrefixStreams(uint32_t p, int e, int n_max) : n_max_(n_max) {
  if (n_max >= static_cast<int>(p)) throw DomainError("prefix streams require n_max < p");
  inv_ = batch_inverses(p, e, n_max);
  h_.resize(static_cast<size_t>(n_max) + 1);
  h2_.resize(static_cast<size_t>(n_max) + 1);
  h_[0] = CappedPadic::exact_zero(p);
  h2_[0] = CappedPadic::exact_zero(p);
  for (int j = 1; j <= n_max; ++j) {
    h_[static_cast<size_t>(j)] = h_[static_cast<size_t>(j - 1)] + inv_[static_cast<size_t>(j)];
    h2_[static_cast<size_t>(j)] =
        h2_[static_cast<size_t>(j - 1)] + inv_[static_cast<size_t>(j)] * inv_[static_cast<size_t>(j)];
  }
}

}  // namespace sccheck
