#pragma once

#include <cstdint>

namespace absorb {

/// SplitMix64 (Steele, Lea, Flood 2014): the 64-bit seedable, splittable
/// generator used for every reproducible corpus in this project. Fixing the
/// generator in the public header pins random corpora across platforms and
/// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by multiply-shift; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// An independent stream derived from this one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace absorb
