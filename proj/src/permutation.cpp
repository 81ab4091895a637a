#include "altseq/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "altseq/error.hpp"

namespace altseq {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

std::string_view to_string(Convention c) {
  return c == Convention::kFirstStepDescent ? "descent-first" : "ascent-first";
}

Convention parse_convention(std::string_view text) {
  if (text == "descent" || text == "desc" || text == "descent-first") {
    return Convention::kFirstStepDescent;
  }
  if (text == "ascent" || text == "asc" || text == "ascent-first") {
    return Convention::kFirstStepAscent;
  }
  throw InvalidArgument("unknown convention '" + std::string(text) +
                        "' (expected descent or ascent)");
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) throw InvalidArgument("not a permutation: empty sequence");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation: " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation size must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int v = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw InvalidArgument("not a permutation: cannot parse '" + std::string(text) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

DescentWord descent_word(const Permutation& w) {
  DescentWord s;
  const auto v = w.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    s.push_back(v[i] < v[i + 1] ? Sign::kAscent : Sign::kDescent);
  }
  return s;
}

namespace {

// Does v contain an alternating subsequence of exactly `target` elements,
// given that `length` elements are already chosen (the last being `last`)
// and the next comparison must be `need`?
bool find_alternating(std::span<const int> v, std::size_t pos, int last, Sign need, int length,
                      int target) {
  if (length == target) return true;
  if (length + static_cast<int>(v.size() - pos) < target) return false;
  for (std::size_t j = pos; j < v.size(); ++j) {
    const bool ok = need == Sign::kAscent ? v[j] > last : v[j] < last;
    if (ok && find_alternating(v, j + 1, v[j], flip(need), length + 1, target)) return true;
  }
  return false;
}

}  // namespace

int as_bruteforce(const Permutation& w, Convention c, int max_n) {
  if (w.size() > max_n) {
    throw OracleTooLarge("as_bruteforce: oracle too large (n = " + std::to_string(w.size()) +
                         " > " + std::to_string(max_n) + ")");
  }
  const auto v = w.values();
  int best = 1;
  // Every prefix of an alternating subsequence alternates, so the first
  // failing length ends the search.
  for (int target = 2; target <= w.size(); ++target) {
    bool found = false;
    for (std::size_t i = 0; i < v.size() && !found; ++i) {
      found = find_alternating(v, i + 1, v[i], start_sign(c), 1, target);
    }
    if (!found) break;
    best = target;
  }
  return best;
}

int as_linear(const Permutation& w, Convention c) {
  const auto v = w.values();
  if (v.size() == 1) return 1;
  int runs = 1;
  bool prev_up = v[0] < v[1];
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const bool up = v[i] < v[i + 1];
    if (up != prev_up) ++runs;
    prev_up = up;
  }
  const Sign first = v[0] < v[1] ? Sign::kAscent : Sign::kDescent;
  return first == start_sign(c) ? runs + 1 : runs;
}

Permutation complement(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(w.values().begin(), w.values().end());
  for (int& x : out) x = n + 1 - x;
  return Permutation(std::move(out));
}

Permutation sample_permutation(int n, Rng& rng) {
  if (n < 1) throw InvalidArgument("sample_permutation: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = v.size() - 1; i > 0; --i) {
    std::swap(v[i], v[rng.below(i + 1)]);
  }
  return Permutation(std::move(v));
}

}  // namespace altseq
