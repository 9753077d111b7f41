#include "jigsaw/rng.hpp"

#include <unistd.h>

#include <cstring>
#include <stdexcept>

#include "jigsaw/errors.hpp"
#include "jigsaw/wire.hpp"

namespace jigsaw {

namespace {

uint64_t splitmix64(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

uint64_t Rng::next_u64() {
  const uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

uint64_t Rng::uniform(uint64_t bound) {
  if (bound == 0) fail(Errc::InvariantViolation, "uniform bound must be >= 1");
  // rejection sampling keeps the draw exactly uniform
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

void Rng::fill(std::span<uint8_t> out) {
  size_t i = 0;
  while (i + 8 <= out.size()) {
    store_be64(out.data() + i, next_u64());
    i += 8;
  }
  if (i < out.size()) {
    uint8_t tail[8];
    store_be64(tail, next_u64());
    std::memcpy(out.data() + i, tail, out.size() - i);
  }
}

std::vector<uint8_t> Rng::bytes(size_t n) {
  std::vector<uint8_t> out(n);
  fill(out);
  return out;
}

std::vector<uint8_t> os_random_bytes(size_t n) {
  std::vector<uint8_t> out(n);
  size_t off = 0;
  while (off < n) {
    const size_t chunk = std::min<size_t>(256, n - off);
    if (getentropy(out.data() + off, chunk) != 0)
      fail(Errc::IoError, "getentropy failed");
    off += chunk;
  }
  return out;
}

Rng os_seeded_rng() {
  const auto seed_bytes = os_random_bytes(8);
  return Rng(load_be64(seed_bytes.data()));
}

}  // namespace jigsaw
