#pragma once

#include <cstdint>

namespace ptv {

/// SplitMix64: tiny deterministic generator for sampled checks.  Unlike the
/// std distributions its output stream depends only on the seed, so a seed
/// printed in a report reproduces the exact sample on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound).  Modulo bias is below 2^-50 for the
  /// bounds used here (at most a few thousand).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace ptv
