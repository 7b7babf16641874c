#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lbd {

// FNV-1a 64-bit. Content fingerprinting for manifests; not cryptographic.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* kDigits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::uint64_t hash_file(const std::string& path);

}  // namespace lbd
