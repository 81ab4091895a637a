#include "altseq/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "altseq/error.hpp"
#include "altseq/moments.hpp"

namespace altseq {

namespace {

void run_shard(int n, Convention c, std::uint64_t seed, std::uint64_t shard, std::uint64_t draws,
               std::vector<std::uint64_t>& counts) {
  Rng rng(shard_seed(seed, shard));
  for (std::uint64_t i = 0; i < draws; ++i) {
    ++counts[static_cast<std::size_t>(as_linear(sample_permutation(n, rng), c) - 1)];
  }
}

}  // namespace

EmpiricalHistogram empirical_histogram(int n, std::uint64_t samples, std::uint64_t seed,
                                       Convention c, int threads) {
  if (n < 1) throw InvalidArgument("empirical_histogram: n must be >= 1");
  if (samples < 1) throw InvalidArgument("empirical_histogram: need at least one sample");
  const std::uint64_t shards = (samples + kShardSize - 1) / kShardSize;
  const auto workers = static_cast<std::uint64_t>(std::clamp<long long>(
      threads, 1, static_cast<long long>(shards)));

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  auto work = [&](std::uint64_t worker) {
    for (std::uint64_t s = worker; s < shards; s += workers) {
      const std::uint64_t draws = std::min(kShardSize, samples - s * kShardSize);
      run_shard(n, c, seed, s, draws, partial[worker]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  EmpiricalHistogram h{n, samples, seed, c, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < p.size(); ++k) h.counts[k] += p[k];
  }
  return h;
}

namespace {

BigInt to_big(std::uint64_t x) {
  BigInt b;
  mpz_import(b.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return b;
}

}  // namespace

double tv_distance(const EmpiricalHistogram& a, const DistributionTable& t) {
  if (a.n != t.n) throw InvalidArgument("tv_distance: histogram and table have different n");
  const BigInt m = to_big(a.samples);
  const BigInt total = t.total();
  BigInt l1 = 0;
  for (int k = 1; k <= a.n; ++k) {
    l1 += abs(to_big(a.counts[static_cast<std::size_t>(k - 1)]) * total - t.count(k) * m);
  }
  return Rational(l1, 2 * m * total).get_d();
}

double tv_distance(const EmpiricalHistogram& a, const EmpiricalHistogram& b) {
  if (a.n != b.n) throw InvalidArgument("tv_distance: histograms have different n");
  const BigInt ma = to_big(a.samples);
  const BigInt mb = to_big(b.samples);
  BigInt l1 = 0;
  for (std::size_t k = 0; k < a.counts.size(); ++k) {
    l1 += abs(to_big(a.counts[k]) * mb - to_big(b.counts[k]) * ma);
  }
  return Rational(l1, 2 * ma * mb).get_d();
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_to_normal(const DistributionTable& t) {
  if (t.n < 2) throw InvalidArgument("kolmogorov_to_normal: n must be >= 2");
  const MomentTable mt = moments_from_table(t, 2);
  const double sd = std::sqrt(mt.m(2).get_d());
  const BigInt total = t.total();
  BigInt cumulative = 0;
  double worst = 0.0;
  for (int k = 1; k <= t.n; ++k) {
    cumulative += t.count(k);
    const double cdf = Rational(cumulative, total).get_d();
    const double z = Rational(Rational(k) - mt.mean).get_d() / sd;
    worst = std::max(worst, std::abs(cdf - normal_cdf(z)));
  }
  return worst;
}

}  // namespace altseq
