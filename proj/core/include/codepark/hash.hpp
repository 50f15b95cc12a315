#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace codepark {

/// 64-bit FNV-1a. Stable across platforms, used for ids and content digests.
class Fnv1a64 {
 public:
  Fnv1a64& update(std::string_view bytes) noexcept {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  std::uint64_t digest() const noexcept { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::string fnv1a64_hex(std::string_view bytes) { return Fnv1a64{}.update(bytes).hex(); }

}  // namespace codepark
