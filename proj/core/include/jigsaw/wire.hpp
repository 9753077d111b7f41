#pragma once

#include <cstddef>
#include <cstdint>

namespace jigsaw {

// Big-endian integer accessors for the wire formats.

inline void store_be32(uint8_t* out, uint32_t v) {
  out[0] = static_cast<uint8_t>(v >> 24);
  out[1] = static_cast<uint8_t>(v >> 16);
  out[2] = static_cast<uint8_t>(v >> 8);
  out[3] = static_cast<uint8_t>(v);
}

inline void store_be64(uint8_t* out, uint64_t v) {
  store_be32(out, static_cast<uint32_t>(v >> 32));
  store_be32(out + 4, static_cast<uint32_t>(v));
}

inline uint32_t load_be32(const uint8_t* in) {
  return (static_cast<uint32_t>(in[0]) << 24) | (static_cast<uint32_t>(in[1]) << 16) |
         (static_cast<uint32_t>(in[2]) << 8) | static_cast<uint32_t>(in[3]);
}

inline uint64_t load_be64(const uint8_t* in) {
  return (static_cast<uint64_t>(load_be32(in)) << 32) | load_be32(in + 4);
}

}  // namespace jigsaw
