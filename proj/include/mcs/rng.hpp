#pragma once

#include <cstdint>

namespace mcs {

// Deterministic generator RNG: splitmix64 over a seed counter, bounded
// draws by modulo. Fixed here so corpora reproduce exactly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Bernoulli with probability p.
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mcs
