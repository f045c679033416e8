#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sccheck/binomial_sums.hpp"
#include "sccheck/special_numbers.hpp"

using namespace sccheck;

TEST_CASE("binom_exact") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(5, 6) == 0);
  CHECK(binom_exact(5, -1) == 0);
  CHECK(binom_exact(10, 5) == 252);
  CHECK_THROWS_AS(binom_exact(-1, 0), DomainError);
}

TEST_CASE("central binomial stream frozen residue") {
  CentralBinomStream st(11, 1, 8);
  CHECK(st.at(5).residue(1) == 10);  // C(10,5) = 252 == 10 mod 11
  CHECK(st.at(0).residue(1) == 1);
  CHECK(st.limit() == 8);
}

TEST_CASE("central binomial stream matches exact values across p") {
  for (uint32_t p : {5u, 7u, 13u, 61u}) {
    const int e = 3;
    const int n_max = static_cast<int>(p) - 2;
    CentralBinomStream st(p, e, n_max);
    for (int n = 0; n <= n_max; ++n) {
      BigInt c = binom_exact(2L * n, n);
      auto want = CappedPadic::from_integer(c, p, e);
      CHECK(st.at(n).valuation() == want.valuation());
      CHECK(congruent(st.at(n), want, want.valuation() + e));
    }
  }
}

TEST_CASE("central binomial stream crosses p with correct valuations") {
  // n > (p-1)/2 picks up a factor p; n near p^2 would pick up two
  const uint32_t p = 5;
  const int e = 2;
  CentralBinomStream st(p, e, 30);
  for (int n = 0; n <= 30; ++n) {
    BigInt c = binom_exact(2L * n, n);
    int v = rational_valuation(BigRational(c), p);
    auto want = CappedPadic::from_integer(c, p, e);
    CHECK(st.at(n).valuation() == v);
    CHECK(congruent(st.at(n), want, v + e));
  }
}

TEST_CASE("div_exact") {
  uint32_t p = 7;
  auto a = CappedPadic::from_integer(98, p, 2);  // v = 2
  auto b = CappedPadic::from_integer(49, p, 2);  // v = 2
  CHECK(div_exact(a, b).residue(2) == 2);
  CHECK(div_exact(b, a).residue(1) == 4);  // 1/2 mod 7
  auto c = CappedPadic::from_integer(7, p, 2);   // v = 1
  CHECK_THROWS_AS(div_exact(c, b), DomainError);  // 1/7 not p-integral
  CHECK_THROWS_AS(div_exact(a, CappedPadic::exact_zero(p)), DomainError);
}

TEST_CASE("sum_256 exact oracle at small upper") {
  CHECK(sum_256_exact(0) == 1);
  CHECK(sum_256_exact(1) == BigRational(39, 32));
  CHECK(sum_256_exact(2) == BigRational(10335, 8192));
}

TEST_CASE("sum_256 modular equals exact reduced") {
  for (uint32_t p : {5u, 7u, 11u, 13u, 37u}) {
    int s = (static_cast<int>(p) - 1) / 2;
    auto modular = sum_256(p, 7, s);
    auto exact = CappedPadic::from_rational(sum_256_exact(s), p, 7);
    CHECK(congruent(modular, exact, 5));
  }
}

TEST_CASE("sum_16 modular equals exact reduced") {
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    auto modular = sum_16(p, 6);
    auto exact =
        CappedPadic::from_rational(sum_16_exact(static_cast<int>(p) - 1), p, 6);
    CHECK(congruent(modular, exact, 4));
  }
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(BigRational(1, 2), 2) == BigRational(3, 4));
  CHECK(rising_factorial(BigRational(1, 2), 3) == BigRational(15, 8));
  CHECK(rising_factorial(BigRational(1, 2), 0) == 1);
  const uint32_t p = 13;
  for (int k = 0; k <= 5; ++k) {
    auto exact = CappedPadic::from_rational(
        rising_factorial(BigRational(3, 2), k), p, 2);
    CHECK(congruent(rising_factorial_mod(BigRational(3, 2), k, p, 2), exact, 2));
  }
}

TEST_CASE("WZ pair frozen values") {
  CHECK(F_eval({0, 0}) == 1);
  CHECK(F_eval({1, 0}) == BigRational(7, 32));
  CHECK(F_eval({1, 1}) == BigRational(15, 16));
  CHECK(F_eval({1, 2}) == 0);  // vanishes for n < k
  CHECK(G_eval({1, 1}) == 1);
  CHECK(G_eval({2, 1}) == BigRational(9, 32));
  CHECK(G_eval({0, 3}) == 0);
  CHECK(G_eval({0, 0}) == 0);
}

TEST_CASE("WZ relation at frozen points") {
  // n=1, k=1: both sides -23/32
  BigRational lhs = F_eval({1, 0}) - F_eval({1, 1});
  BigRational rhs = G_eval({2, 1}) - G_eval({1, 1});
  CHECK(lhs == BigRational(-23, 32));
  CHECK(rhs == BigRational(-23, 32));
  // n=0, k=1: both sides 1
  CHECK(F_eval({0, 0}) - F_eval({0, 1}) == 1);
  CHECK(G_eval({1, 1}) - G_eval({0, 1}) == 1);
}

TEST_CASE("F_mod and G_mod agree with the exact evaluations") {
  const uint32_t p = 11;
  const int e = 4;
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      auto fe = CappedPadic::from_rational(F_eval({n, k}), p, e);
      CHECK(congruent(F_mod({n, k}, p, e), fe, e));
      auto ge = CappedPadic::from_rational(G_eval({n, k}), p, e);
      CHECK(congruent(G_mod({n, k}, p, e), ge, e));
    }
}

TEST_CASE("F_half_half matches the direct evaluation") {
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    int s = (static_cast<int>(p) - 1) / 2;
    auto direct = CappedPadic::from_rational(F_eval({s, s}), p, 6);
    CHECK(congruent(F_half_half(p, 6), direct, 6));
  }
}
