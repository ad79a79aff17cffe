#pragma once

#include <cstdint>

namespace plumb {

/// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state; the output sequence is a
/// pure function of the seed on every platform, which std:: distributions are not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [lo, hi] (inclusive), by rejection sampling.
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

}  // namespace plumb
