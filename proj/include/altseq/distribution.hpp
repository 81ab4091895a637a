#pragma once

#include <vector>

#include <gmpxx.h>

#include "altseq/permutation.hpp"

namespace altseq {

using BigInt = mpz_class;

// Exact counts b_{n,k} = #{w in S_n : as(w) = k} for k = 1..n.
struct DistributionTable {
  int n = 0;
  Convention convention = kDefaultConvention;
  std::vector<BigInt> counts;  // counts[k - 1]

  const BigInt& count(int k) const { return counts[static_cast<std::size_t>(k - 1)]; }
  BigInt total() const;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

BigInt factorial(int n);

inline constexpr int kDistributionBruteforceMaxN = 10;
inline constexpr int kDefaultNMax = 300;

// Enumerates all n! permutations and tallies as_linear.
DistributionTable distribution_bruteforce(int n, Convention c = kDefaultConvention,
                                          int max_n = kDistributionBruteforceMaxN);

// Rank dynamic program over states (rank of last element, last sign,
// current statistic), O(n^3) big-integer additions.
// Throws ResourceLimit when n > n_max.
DistributionTable distribution_dp(int n, Convention c = kDefaultConvention,
                                  int n_max = kDefaultNMax);

// The same DP, returning the tables for every prefix length 1..n.
std::vector<DistributionTable> distribution_family(int n, Convention c = kDefaultConvention,
                                                   int n_max = kDefaultNMax);

}  // namespace altseq
