#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "sccheck/harmonic.hpp"
#include "sccheck/special_numbers.hpp"

using namespace sccheck;

TEST_CASE("MhsIndex shape") {
  MhsIndex idx({1, -2, 3});
  CHECK(idx.depth() == 3);
  CHECK(idx.weight() == 6);
  CHECK_THROWS_AS(MhsIndex({1, 0}), DomainError);
}

TEST_CASE("mhs_exact frozen values") {
  CHECK(mhs_exact(MhsIndex({1}), 2) == BigRational(3, 2));
  CHECK(mhs_exact(MhsIndex({1, -1}), 2) == BigRational(1, 2));
  CHECK(mhs_exact(MhsIndex({1, 1}), 1) == 0);  // depth exceeds n
  CHECK(mhs_exact(MhsIndex({2}), 3) == BigRational(49, 36));
  CHECK(mhs_exact(MhsIndex({-1}), 1) == BigRational(-1));
  CHECK(mhs_exact(MhsIndex({-1}), 2) == BigRational(-1, 2));
}

TEST_CASE("mhs_mod frozen residues") {
  CHECK(mhs_mod(MhsIndex({1}), 2, 7, 1).residue(1) == 5);   // 3/2 mod 7
  CHECK(mhs_mod(MhsIndex({2}), 2, 7, 1).residue(1) == 3);   // 5/4 mod 7
  auto h4 = mhs_mod(MhsIndex({1}), 4, 5, 2);  // 25/12: vanishes at this window
  CHECK(h4.residue(2) == 0);
  CHECK(h4.is_zero());
  CHECK(h4.abs_prec() >= 2);
  // a wider window resolves the exact valuation
  CHECK(mhs_mod(MhsIndex({1}), 4, 5, 3).valuation() == 2);
  auto w = mhs_mod(MhsIndex({2}), 3, 7, 1);                 // 49/36: v = 2
  CHECK(w.residue(1) == 0);
}

TEST_CASE("mhs_mod requires n < p") {
  CHECK_THROWS_AS(mhs_mod(MhsIndex({1}), 7, 7, 1), DomainError);
}

TEST_CASE("mhs_mod agrees with mhs_exact on a mixed grid") {
  const uint32_t p = 29;
  const int e = 2;
  std::vector<MhsIndex> grid;
  for (int a : {1, -1, 2, -2, 3, -3}) {
    grid.emplace_back(std::vector<int>{a});
    for (int b : {1, -2, 3})
      grid.emplace_back(std::vector<int>{a, b});
  }
  grid.emplace_back(std::vector<int>{1, 1, 1});
  grid.emplace_back(std::vector<int>{2, -1, 1});
  grid.emplace_back(std::vector<int>{-3, 2, -1});
  for (const auto& idx : grid)
    for (int n = 0; n <= 15; ++n) {
      auto exact = CappedPadic::from_rational(mhs_exact(idx, n), p, e);
      CHECK(congruent(mhs_mod(idx, n, p, e), exact, e));
    }
}

TEST_CASE("odd_harmonic") {
  CHECK(odd_harmonic(2, 5, 1).residue(1) == 3);  // 1 + 1/3 = 4/3
  CHECK(odd_harmonic(3, 7, 1).residue(1) == 2);  // 23/15
  CHECK_THROWS_AS(odd_harmonic(3, 5, 1), DomainError);  // 2n-1 = p
  // exact cross-check
  for (int n = 1; n <= 10; ++n) {
    BigRational o;
    for (int k = 1; k <= n; ++k) o += BigRational(1, 2 * k - 1);
    CHECK(congruent(odd_harmonic(n, 23, 2),
                    CappedPadic::from_rational(o, 23, 2), 2));
  }
}

TEST_CASE("shuffle identity 2 H(1,1;n) = H_n^2 - H(2;n)") {
  for (int n = 0; n <= 40; ++n) {
    BigRational lhs = BigRational(2) * mhs_exact(MhsIndex({1, 1}), n);
    BigRational h1 = mhs_exact(MhsIndex({1}), n);
    BigRational rhs = h1 * h1 - mhs_exact(MhsIndex({2}), n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("partial fractions: sum 1/(k(2k-1)) = 2 odd_harmonic - H_n") {
  for (int n = 1; n <= 40; ++n) {
    BigRational lhs, odd;
    for (int k = 1; k <= n; ++k) {
      lhs += BigRational(1, static_cast<long>(k) * (2 * k - 1));
      odd += BigRational(1, 2 * k - 1);
    }
    CHECK(lhs == BigRational(2) * odd - mhs_exact(MhsIndex({1}), n));
  }
}

TEST_CASE("Wolstenholme valuations across primes") {
  for (uint32_t p : primes_in_range(5, 199)) {
    auto h1 = mhs_mod(MhsIndex({1}), static_cast<int>(p) - 1, p, 3);
    auto h2 = mhs_mod(MhsIndex({2}), static_cast<int>(p) - 1, p, 2);
    CHECK((h1.is_zero() ? h1.abs_prec() >= 2 : h1.valuation() >= 2));
    CHECK((h2.is_zero() ? h2.abs_prec() >= 1 : h2.valuation() >= 1));
  }
}

TEST_CASE("batch_inverses and PrefixStreams") {
  const uint32_t p = 23;
  const int e = 3;
  auto inv = batch_inverses(p, e, 20);
  for (int j = 1; j <= 20; ++j) {
    auto prod = inv[static_cast<size_t>(j)] *
                CappedPadic::from_integer(static_cast<long>(j), p, e);
    CHECK(congruent(prod, CappedPadic::one(p, e), e));
  }

  PrefixStreams st(p, e, 20);
  CHECK(st.limit() == 20);
  for (int j = 0; j <= 20; ++j) {
    CHECK(congruent(st.h(j), mhs_mod(MhsIndex({1}), j, p, e), e));
    CHECK(congruent(st.h2(j), mhs_mod(MhsIndex({2}), j, p, e), e));
  }
  for (int j = 1; j <= 20; ++j)
    CHECK(congruent(st.inv(j), inv[static_cast<size_t>(j)], e));
}
