#include "sccheck/special_numbers.hpp"

#include <stdexcept>

namespace sccheck {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// inverse table 1..n mod p (n < p)
std::vector<uint64_t> inverse_table(uint32_t n, uint64_t p) {
  std::vector<uint64_t> inv(n + 1, 0);
  if (n >= 1) inv[1] = 1;
  for (uint32_t i = 2; i <= n; ++i)
    inv[i] = mulmod(p - (p / i), inv[p % i], p);
  return inv;
}

void require_odd_prime(uint32_t p) {
  if (p < 5 || !is_prime(p)) throw DomainError("expected a prime >= 5");
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> primes_in_range(int64_t lo, int64_t hi) {
  std::vector<uint32_t> out;
  if (hi < 2 || hi < lo) return out;
  int64_t n = hi;
  std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
  for (int64_t i = 2; i * i <= n; ++i)
    if (!composite[static_cast<size_t>(i)])
      for (int64_t j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
  for (int64_t i = std::max<int64_t>(lo, 2); i <= n; ++i)
    if (!composite[static_cast<size_t>(i)]) out.push_back(static_cast<uint32_t>(i));
  return out;
}

std::vector<uint64_t> bernoulli_table_mod_p(uint32_t p) {
  require_odd_prime(p);
  uint64_t P = p;
  std::vector<uint64_t> inv = inverse_table(p - 1, P);
  std::vector<uint64_t> B(p - 2, 0);  // indices 0..p-3
  B[0] = 1;
  B[1] = P - inv[2];  // B_1 = -1/2
  for (uint32_t n = 2; n <= p - 3; ++n) {
    uint64_t acc = 1;  // j = 0 term: binom(n+1,0) * B_0
    uint64_t c = 1;    // binom(n+1, j), walked multiplicatively
    for (uint32_t j = 1; j < n; ++j) {
      c = mulmod(c, n + 2 - j, P);
      c = mulmod(c, inv[j], P);
      if (B[j]) acc = (acc + mulmod(c, B[j], P)) % P;
    }
    B[n] = mulmod((P - acc) % P, inv[n + 1], P);
  }
  return B;
}

uint64_t bernoulli_p3_recurrence(uint32_t p) {
  return bernoulli_table_mod_p(p)[p - 3];
}

uint64_t bernoulli_p3_powersum(uint32_t p) {
  require_odd_prime(p);
  BigInt m = prime_power(p, 2);
  BigInt s = 0;
  for (uint32_t a = 1; a < p; ++a) {
    BigInt base(a), t;
    mpz_powm_ui(t.get_mpz_t(), base.get_mpz_t(), p - 3, m.get_mpz_t());
    s += t;
  }
  CappedPadic S = CappedPadic::from_residue(s, p, 2);
  CappedPadic b = S.div_exact_p(1);
  return static_cast<uint64_t>(b.residue(1).get_ui());
}

uint64_t euler_p3(uint32_t p) {
  require_odd_prime(p);
  uint64_t P = p;
  std::vector<uint64_t> inv = inverse_table(p - 1, P);
  // E_{2n} = -sum_{k<n} binom(2n, 2k) E_{2k}; E: index by n (E[n] = E_{2n} mod p)
  uint32_t nmax = (p - 3) / 2;
  std::vector<uint64_t> E(nmax + 1, 0);
  E[0] = 1;
  for (uint32_t n = 1; n <= nmax; ++n) {
    uint64_t acc = 1;  // k = 0 term
    uint64_t c = 1;    // binom(2n, 2k), walked multiplicatively
    for (uint32_t k = 1; k < n; ++k) {
      c = mulmod(c, 2 * n - 2 * k + 2, P);
      c = mulmod(c, 2 * n - 2 * k + 1, P);
      c = mulmod(c, inv[2 * k - 1], P);
      c = mulmod(c, inv[2 * k], P);
      if (E[k]) acc = (acc + mulmod(c, E[k], P)) % P;
    }
    E[n] = (P - acc) % P;
  }
  return E[nmax];
}

CappedPadic fermat_quotient2(uint32_t p, int e) {
  require_odd_prime(p);
  if (e < 1) throw DomainError("precision must be >= 1");
  CappedPadic two = CappedPadic::from_integer(2, p, e + 1);
  CappedPadic t = two.pow(p - 1) - CappedPadic::one(p, e + 1);
  return t.div_exact_p(1);
}

SpecialValues SpecialValues::compute(uint32_t p, int q_precision) {
  SpecialValues sv;
  sv.p = p;
  sv.bernoulli = bernoulli_table_mod_p(p);
  sv.bernoulli_p3 = sv.bernoulli[p - 3];
  uint64_t cross = bernoulli_p3_powersum(p);
  if (cross != sv.bernoulli_p3)
    throw DomainError("Bernoulli recurrence and power-sum routes disagree at p=" +
                      std::to_string(p));
  sv.euler_p3 = sccheck::euler_p3(p);
  sv.fermat_q2 = fermat_quotient2(p, q_precision);
  return sv;
}

uint64_t SpecialValues::bernoulli_at(int index) const {
  if (index < 0 || index > static_cast<int>(p) - 3)
    throw DomainError("Bernoulli index out of table range");
  return bernoulli[static_cast<size_t>(index)];
}

}  // namespace sccheck
