#pragma once

#include <cstdint>
#include <string_view>

namespace driftlens {

// FNV-1a 64-bit. Used for blob checksums and config hashes; platform-stable
// by construction (std::hash is not).
inline constexpr uint64_t fnv1a64(const void* data, size_t len,
                                  uint64_t seed = 0xcbf29ce484222325ull) {
  uint64_t h = seed;
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline constexpr uint64_t fnv1a64(std::string_view s,
                                  uint64_t seed = 0xcbf29ce484222325ull) {
  return fnv1a64(s.data(), s.size(), seed);
}

}  // namespace driftlens
