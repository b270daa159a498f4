#pragma once

// SplitMix64 (Steele, Lea & Flood 2014), the single source of randomness in
// this project so that every sampled result is reproducible from one seed.
//
// Stream layout: substream(seed, i) seeds a fresh generator with
// finalize(seed + GOLDEN) ^ finalize(i + LEA), giving an independent stream
// per item i. Monte Carlo consumers document the per-item draw order next to
// their loops; totals are accumulated in item order, so results are bitwise
// reproducible and independent of any internal chunking.

#include <cstdint>

namespace qent {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(finalize(seed + 0x9E3779B97F4A7C15ULL) ^
                      finalize(index + 0x94D049BB133111EBULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qent
