#include "altseq/distribution.hpp"

#include <algorithm>
#include <numeric>

#include "altseq/error.hpp"

namespace altseq {

BigInt DistributionTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

BigInt factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return f;
}

DistributionTable distribution_bruteforce(int n, Convention c, int max_n) {
  if (n < 1) throw InvalidArgument("distribution_bruteforce: n must be >= 1");
  if (n > max_n) {
    throw OracleTooLarge("distribution_bruteforce: oracle too large (n = " + std::to_string(n) +
                         " > " + std::to_string(max_n) + ")");
  }
  std::vector<unsigned long> tally(static_cast<std::size_t>(n), 0);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    ++tally[static_cast<std::size_t>(as_linear(Permutation(v), c) - 1)];
  } while (std::next_permutation(v.begin(), v.end()));

  DistributionTable t{n, c, {}};
  for (auto x : tally) t.counts.emplace_back(x);
  return t;
}

namespace {

// Counts of prefixes of length i by (last sign, rank of last element,
// statistic so far). Ranks and statistic values are 1-based.
class PrefixStates {
 public:
  explicit PrefixStates(int capacity)
      : stride_(static_cast<std::size_t>(capacity) + 2),
        cells_(2 * stride_ * stride_) {}

  BigInt& at(Sign s, int rank, int k) { return cells_[index(s, rank, k)]; }
  const BigInt& at(Sign s, int rank, int k) const { return cells_[index(s, rank, k)]; }

  void clear(int limit) {
    for (int s = 0; s < 2; ++s) {
      for (int l = 0; l <= limit; ++l) {
        for (int k = 0; k <= limit; ++k) at(static_cast<Sign>(s), l, k) = 0;
      }
    }
  }

 private:
  std::size_t index(Sign s, int rank, int k) const {
    return (static_cast<std::size_t>(s) * stride_ + static_cast<std::size_t>(rank)) * stride_ +
           static_cast<std::size_t>(k);
  }

  std::size_t stride_;
  std::vector<BigInt> cells_;
};

DistributionTable tally(const PrefixStates& states, int i, Convention c) {
  DistributionTable t{i, c, std::vector<BigInt>(static_cast<std::size_t>(i))};
  for (Sign s : {Sign::kAscent, Sign::kDescent}) {
    for (int l = 1; l <= i; ++l) {
      for (int k = 1; k <= i; ++k) t.counts[static_cast<std::size_t>(k - 1)] += states.at(s, l, k);
    }
  }
  return t;
}

}  // namespace

std::vector<DistributionTable> distribution_family(int n, Convention c, int n_max) {
  if (n < 1) throw InvalidArgument("distribution_dp: n must be >= 1");
  if (n > n_max) {
    throw ResourceLimit("distribution_dp: n = " + std::to_string(n) + " exceeds N_max = " +
                        std::to_string(n_max));
  }
  std::vector<DistributionTable> family;
  family.push_back({1, c, {BigInt(1)}});
  if (n == 1) return family;

  PrefixStates cur(n);
  PrefixStates next(n);

  // Length 2: the first comparison starts the pattern iff it has the
  // convention's sign.
  const Sign first = start_sign(c);
  cur.at(Sign::kAscent, 2, first == Sign::kAscent ? 2 : 1) = 1;
  cur.at(Sign::kDescent, 1, first == Sign::kDescent ? 2 : 1) = 1;
  family.push_back(tally(cur, 2, c));

  BigInt same;
  BigInt turned;
  for (int i = 2; i < n; ++i) {
    next.clear(i + 2);
    // Appending rank r' in 1..i+1 to a prefix whose last rank is l gives an
    // ascent iff r' > l. The statistic grows iff the sign changes.
    for (int k = 1; k <= i; ++k) {
      same = 0;
      turned = 0;
      for (int r = 2; r <= i + 1; ++r) {
        same += cur.at(Sign::kAscent, r - 1, k);
        turned += cur.at(Sign::kDescent, r - 1, k);
        next.at(Sign::kAscent, r, k) += same;
        next.at(Sign::kAscent, r, k + 1) += turned;
      }
      same = 0;
      turned = 0;
      for (int r = i; r >= 1; --r) {
        same += cur.at(Sign::kDescent, r, k);
        turned += cur.at(Sign::kAscent, r, k);
        next.at(Sign::kDescent, r, k) += same;
        next.at(Sign::kDescent, r, k + 1) += turned;
      }
    }
    std::swap(cur, next);
    family.push_back(tally(cur, i + 1, c));
  }
  return family;
}

DistributionTable distribution_dp(int n, Convention c, int n_max) {
  return std::move(distribution_family(n, c, n_max).back());
}

}  // namespace altseq
