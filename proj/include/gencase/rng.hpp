#pragma once

#include <cstdint>

namespace gencase {

/// splitmix64 stream. Self-contained so that seeded runs are reproducible
/// byte-for-byte across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound >= 1; rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent stream for shard `index` of a seeded experiment.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ index);
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gencase
