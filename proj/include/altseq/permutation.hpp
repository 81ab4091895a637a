#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altseq/rng.hpp"

namespace altseq {

enum class Sign : std::uint8_t { kAscent, kDescent };

// Which comparison an alternating subsequence must start with.
//   kFirstStepDescent: b1 > b2 < b3 > ...
//   kFirstStepAscent:  b1 < b2 > b3 < ...
// Both give the same distribution of the statistic (see complement()).
enum class Convention : std::uint8_t { kFirstStepDescent, kFirstStepAscent };

inline constexpr Convention kDefaultConvention = Convention::kFirstStepDescent;

constexpr Sign start_sign(Convention c) {
  return c == Convention::kFirstStepDescent ? Sign::kDescent : Sign::kAscent;
}

constexpr Sign flip(Sign s) {
  return s == Sign::kAscent ? Sign::kDescent : Sign::kAscent;
}

std::string_view to_string(Convention c);
// Accepts "descent", "desc", "descent-first", "ascent", "asc", "ascent-first".
Convention parse_convention(std::string_view text);

// A bijection on {1..n}, n >= 1. Construction validates.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  // Parses "2,1,3". Throws InvalidArgument with "not a permutation" on
  // repeated or out-of-range values.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const { return values_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// signs[i] compares positions i and i+1; empty for n = 1.
using DescentWord = std::vector<Sign>;

DescentWord descent_word(const Permutation& w);

inline constexpr int kBruteforceMaxN = 14;

// Longest alternating subsequence by direct search over subsequences.
// Throws OracleTooLarge when w.size() > max_n.
int as_bruteforce(const Permutation& w, Convention c = kDefaultConvention,
                  int max_n = kBruteforceMaxN);

// Longest alternating subsequence from the runs of the descent word:
// with m maximal runs, the answer is m + 1 if the first sign matches the
// convention and m otherwise (1 when n = 1).
int as_linear(const Permutation& w, Convention c = kDefaultConvention);

// Maps value v to n + 1 - v. Swaps the two conventions:
// as_linear(complement(w), descent) == as_linear(w, ascent).
Permutation complement(const Permutation& w);

// Uniform permutation by Fisher-Yates on the identity, drawing
// j = rng.below(i + 1) for i = n-1 down to 1. Throws on n < 1.
Permutation sample_permutation(int n, Rng& rng);

}  // namespace altseq
