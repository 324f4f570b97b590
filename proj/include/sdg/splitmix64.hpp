#pragma once

#include <cstdint>

namespace sdg {

// SplitMix64 (Steele, Lea, Flood; the java.util.SplittableRandom mixer).
// Chosen as the seeded-generator contract so other-language ports reproduce
// the same streams bit for bit from the same 64-bit seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform-enough integer in [lo, hi]; determinism matters here, not bias
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // derives an independent stream (split), keyed by an index
  SplitMix64 split(std::uint64_t key) {
    SplitMix64 s(next() ^ (key * 0x9E3779B97F4A7C15ull));
    return s;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sdg
