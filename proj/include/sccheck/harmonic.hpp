#pragma once

#include <cstdint>
#include <vector>

#include "sccheck/padic.hpp"

namespace sccheck {

/* Index of an alternating multiple harmonic sum
 *   H(a_1,...,a_m; n) = sum over 1 <= k_1 < ... < k_m <= n of
 *                       prod_i sign(a_i)^{k_i} / k_i^{|a_i|}.
 * Entries are nonzero integers; a negative entry alternates its factor. */
struct MhsIndex {
  explicit MhsIndex(std::vector<int> exps);
  const std::vector<int>& exponents() const { return exps_; }
  int depth() const { return static_cast<int>(exps_.size()); }
  int weight() const;

 private:
  std::vector<int> exps_;
};

/* Exact brute force over strictly increasing tuples; oracle-grade reference.
 * n <= 60 keeps the tuple count sane for depth <= 3. Depth > n gives 0. */
BigRational mhs_exact(const MhsIndex& idx, int n);

/* Single-pass dynamic program at relative precision e, requires n < p so all
 * inner denominators are units. For each k the depth accumulators are updated
 * in descending depth order, so T_{j-1} still excludes parts equal to k when
 * T_j absorbs it; this is what enforces strict increase k_1 < ... < k_m. */
CappedPadic mhs_mod(const MhsIndex& idx, int n, uint32_t p, int e);

/* sum_{k=1}^{n} 1/(2k-1); requires 2n-1 < p to keep denominators units. */
CappedPadic odd_harmonic(int n, uint32_t p, int e);

/* Prefix tables of H_j = H(1;j) and H(2;j) with an inverse table, j <= n_max.
 * Built with one batched inversion; n_max < p. Index shifts cover the derived
 * streams H_{2k}, H_{2k-2}, H(2;2k), H(2;2k-2), H(2;k-1) used by the checks. */
class PrefixStreams {
 public:
  PrefixStreams(uint32_t p, int e, int n_max);
  const CappedPadic& inv(int j) const { return inv_.at(static_cast<size_t>(j)); }
  const CappedPadic& h(int j) const { return h_.at(static_cast<size_t>(j)); }
  const CappedPadic& h2(int j) const { return h2_.at(static_cast<size_t>(j)); }
  int limit() const { return n_max_; }

 private:
  int n_max_;
  std::vector<CappedPadic> inv_, h_, h2_;
};

/* Batched unit inverses 1..n mod p^e (one modular inversion total). */
std::vector<CappedPadic> batch_inverses(uint32_t p, int e, int n);

}  // namespace sccheck
