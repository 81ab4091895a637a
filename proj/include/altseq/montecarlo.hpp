#pragma once

#include <cstdint>
#include <vector>

#include "altseq/distribution.hpp"

namespace altseq {

struct EmpiricalHistogram {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Convention convention = kDefaultConvention;
  std::vector<std::uint64_t> counts;  // counts[k - 1]

  friend bool operator==(const EmpiricalHistogram&, const EmpiricalHistogram&) = default;
};

// Samples are split into shards of kShardSize draws; shard i uses
// Rng(shard_seed(seed, i)). The result depends only on (n, samples, seed,
// convention), never on `threads`.
inline constexpr std::uint64_t kShardSize = 1U << 16;

EmpiricalHistogram empirical_histogram(int n, std::uint64_t samples, std::uint64_t seed,
                                       Convention c = kDefaultConvention, int threads = 1);

// Half the L1 distance between the two probability vectors.
double tv_distance(const EmpiricalHistogram& a, const DistributionTable& t);
double tv_distance(const EmpiricalHistogram& a, const EmpiricalHistogram& b);

double normal_cdf(double x);

// max_k |P(X_n <= k) - Phi((k - mean) / sd)| with the exact mean and sd of
// the table. Right endpoints only, no continuity correction. n >= 2.
double kolmogorov_to_normal(const DistributionTable& t);

}  // namespace altseq
