#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jigsaw {

/// xoshiro256** seeded through splitmix64. The generator is fully specified
/// here rather than borrowed from <random> so that identically seeded runs
/// produce identical byte streams on every platform, which the simulator's
/// reproducibility guarantee depends on.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  /// Unbiased draw from [0, bound); bound must be >= 1.
  uint64_t uniform(uint64_t bound);

  uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

  void fill(std::span<uint8_t> out);
  std::vector<uint8_t> bytes(size_t n);

 private:
  uint64_t state_[4];
};

/// Rng seeded from the operating system entropy pool.
Rng os_seeded_rng();

/// Bytes straight from the OS entropy pool (key generation).
std::vector<uint8_t> os_random_bytes(size_t n);

}  // namespace jigsaw
