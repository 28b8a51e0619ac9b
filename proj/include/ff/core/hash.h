#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ff {

// FNV-1a. Digest space comfortably exceeds per-run candidate counts; an
// in-run collision would surface as a spurious duplicate detection.
inline std::uint64_t Fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

inline std::string HexDigest(std::uint64_t value) {
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace ff
