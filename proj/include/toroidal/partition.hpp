#ifndef TOROIDAL_PARTITION_HPP
#define TOROIDAL_PARTITION_HPP

#include "roots.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace toroidal {

/// Kostant partition function of affine sl2 on the box [0, a0] x [0, a1].
///
/// table[i][j] counts multisets of positive roots summing to i*alpha_0 + j*alpha_1.
/// The positive roots alpha + k delta (k >= 0), -alpha + k delta (k >= 1) and
/// k delta (k >= 1) each have multiplicity one; in simple-root coordinates they
/// are (k, k+1), (k, k-1) and (k, k).
inline std::vector<std::vector<std::uint64_t>> partition_table(std::int64_t a0, std::int64_t a1)
{
  std::vector<std::vector<std::uint64_t>> dp(a0 + 1, std::vector<std::uint64_t>(a1 + 1, 0));
  dp[0][0] = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> roots;
  for (std::int64_t k = 0; k <= a0; ++k) {
    roots.emplace_back(k, k + 1);
    if (k >= 1) {
      roots.emplace_back(k, k - 1);
      roots.emplace_back(k, k);
    }
  }
  for (auto [b0, b1] : roots) {
    if (b0 > a0 || b1 > a1) continue;
    for (std::int64_t i = b0; i <= a0; ++i)
      for (std::int64_t j = b1; j <= a1; ++j) dp[i][j] += dp[i - b0][j - b1];
  }
  return dp;
}

/// dim M(lam)_{lam - eta} for eta in Q1+, independent of the PBW engine.
inline std::uint64_t dim_oracle(const RootVector& eta)
{
  if (!in_q1_plus(eta)) throw domain_error("dim_oracle: eta = " + to_string(eta) + " is not in Q1+");
  auto [a0, a1] = *simple_coords(eta);
  return partition_table(a0, a1)[a0][a1];
}

} // namespace toroidal

#endif
