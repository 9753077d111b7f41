#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jigsaw {

class Rng;

/// Bit string with MSB-first packing: bit i lives in byte i/8 under mask
/// 0x80 >> (i%8). Unused low bits of the final byte are kept zero, which is
/// also the wire rule for fragment payloads, so bytes() can be emitted
/// directly.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits) : bytes_((nbits + 7) / 8, 0), nbits_(nbits) {}

  static BitVec from_bytes(std::span<const uint8_t> bytes, size_t nbits);
  static BitVec random(size_t nbits, Rng& rng);

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(size_t i) const;
  void set(size_t i, bool v);

  void append_bit(bool v);
  void append(const BitVec& other);

  /// Bits [begin, end), end inclusive-exclusive; begin <= end <= size().
  BitVec slice(size_t begin, size_t end) const;

  /// Copies `piece` over bits [at, at + piece.size()); must fit.
  void overwrite(size_t at, const BitVec& piece);

  /// Packed bytes, final partial byte zero-padded in the low bits.
  const std::vector<uint8_t>& bytes() const { return bytes_; }
  size_t byte_size() const { return bytes_.size(); }

  /// Number of differing bits; sizes must match.
  size_t hamming_distance(const BitVec& other) const;

  bool operator==(const BitVec&) const = default;
  // Member order makes the default comparison bitwise-lexicographic with the
  // shorter-prefix-first rule, thanks to the zero-padding invariant.
  auto operator<=>(const BitVec&) const = default;

 private:
  std::vector<uint8_t> bytes_;
  size_t nbits_ = 0;
};

}  // namespace jigsaw
