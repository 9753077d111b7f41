#include "jigsaw/bitvec.hpp"

#include <bit>
#include <cstring>

#include "jigsaw/errors.hpp"
#include "jigsaw/rng.hpp"

namespace jigsaw {

BitVec BitVec::from_bytes(std::span<const uint8_t> bytes, size_t nbits) {
  if (bytes.size() != (nbits + 7) / 8)
    fail(Errc::LengthMismatch, "byte buffer does not match bit count");
  BitVec v;
  v.bytes_.assign(bytes.begin(), bytes.end());
  v.nbits_ = nbits;
  if (nbits % 8 != 0 && !v.bytes_.empty()) {
    const uint8_t mask = static_cast<uint8_t>(0xFF00 >> (nbits % 8));
    v.bytes_.back() &= mask;
  }
  return v;
}

BitVec BitVec::random(size_t nbits, Rng& rng) {
  BitVec v(nbits);
  rng.fill(v.bytes_);
  if (nbits % 8 != 0 && !v.bytes_.empty())
    v.bytes_.back() &= static_cast<uint8_t>(0xFF00 >> (nbits % 8));
  return v;
}

bool BitVec::get(size_t i) const {
  return (bytes_[i >> 3] & (0x80u >> (i & 7))) != 0;
}

void BitVec::set(size_t i, bool v) {
  const uint8_t mask = static_cast<uint8_t>(0x80u >> (i & 7));
  if (v)
    bytes_[i >> 3] |= mask;
  else
    bytes_[i >> 3] &= static_cast<uint8_t>(~mask);
}

void BitVec::append_bit(bool v) {
  if (nbits_ % 8 == 0) bytes_.push_back(0);
  ++nbits_;
  if (v) set(nbits_ - 1, true);
}

void BitVec::append(const BitVec& other) {
  if (nbits_ % 8 == 0) {
    // aligned: straight byte copy
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    nbits_ += other.nbits_;
    return;
  }
  bytes_.resize((nbits_ + other.nbits_ + 7) / 8, 0);
  const size_t base = nbits_;
  nbits_ += other.nbits_;
  for (size_t i = 0; i < other.nbits_; ++i) set(base + i, other.get(i));
}

BitVec BitVec::slice(size_t begin, size_t end) const {
  if (begin > end || end > nbits_) fail(Errc::LengthMismatch, "slice out of range");
  const size_t n = end - begin;
  if (begin % 8 == 0) {
    return from_bytes(std::span(bytes_).subspan(begin / 8, (n + 7) / 8), n);
  }
  BitVec out(n);
  for (size_t i = 0; i < n; ++i) out.set(i, get(begin + i));
  return out;
}

void BitVec::overwrite(size_t at, const BitVec& piece) {
  if (at + piece.nbits_ > nbits_) fail(Errc::LengthMismatch, "overwrite out of range");
  for (size_t i = 0; i < piece.nbits_; ++i) set(at + i, piece.get(i));
}

size_t BitVec::hamming_distance(const BitVec& other) const {
  if (nbits_ != other.nbits_)
    fail(Errc::LengthMismatch, "hamming distance requires equal sizes");
  size_t dist = 0;
  for (size_t i = 0; i < bytes_.size(); ++i)
    dist += std::popcount(static_cast<unsigned>(bytes_[i] ^ other.bytes_[i]));
  return dist;
}

}  // namespace jigsaw
