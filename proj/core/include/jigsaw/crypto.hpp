#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace jigsaw {

inline constexpr size_t kAesBlockSize = 16;
inline constexpr size_t kSha1Size = 20;
inline constexpr size_t kMacSize = 20;

using AesKey = std::array<uint8_t, kAesBlockSize>;
using AesBlock = std::array<uint8_t, kAesBlockSize>;
using Mac = std::array<uint8_t, kMacSize>;

/// AES-128 in raw single-block mode, key scheduled once. Backed by OpenSSL.
class Aes128 {
 public:
  explicit Aes128(const AesKey& key);
  ~Aes128();
  Aes128(const Aes128&) = delete;
  Aes128& operator=(const Aes128&) = delete;

  AesBlock encrypt(const AesBlock& in);

 private:
  void* ctx_;
};

AesBlock aes128_encrypt_block(const AesKey& key, const AesBlock& in);

std::array<uint8_t, kSha1Size> sha1(std::span<const uint8_t> data);

/// RFC 2104 HMAC over SHA-1, full 20-byte tag.
Mac hmac_sha1(std::span<const uint8_t> key, std::span<const uint8_t> data);

/// Constant-time tag comparison.
bool mac_equal(const Mac& a, const Mac& b);

/// CRC-32, reflected polynomial 0xEDB88320, init/xorout 0xFFFFFFFF
/// (check value 0xCBF43926 on "123456789").
uint32_t crc32(std::span<const uint8_t> data);

}  // namespace jigsaw
