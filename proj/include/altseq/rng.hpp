#pragma once

#include <cstdint>
#include <random>

namespace altseq {

// Seeded generator with a fixed, documented stream:
//   engine  std::mt19937_64 seeded with the 64-bit seed as given
//   below(b) rejection sampling: draw x until x >= (2^64 - b) mod b,
//            return x mod b
// std::mt19937_64 is fully specified by the standard, and below() avoids
// std::uniform_int_distribution (implementation-defined), so streams are
// identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive per-shard seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of shard `index` derived from a master seed.
constexpr std::uint64_t shard_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

}  // namespace altseq
