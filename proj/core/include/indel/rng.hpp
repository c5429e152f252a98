#pragma once

#include <cstdint>
#include <random>

#include "indel/exact.hpp"

namespace indel {

/// splitmix64 finalizer; a bijection on 64-bit integers.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the stream used by one (grid point, trial, channel) triple.
/// Streams depend only on these indices, never on thread scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                                    std::uint64_t channel) noexcept {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ point);
  h = splitmix64(h ^ trial);
  return splitmix64(h ^ channel);
}

/// std::mt19937_64 with distributions spelled out, so draws are identical
/// across standard libraries (std::uniform_*_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); multiply-shift, bias below 2^-60 for
  /// the small bounds used here.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace indel
