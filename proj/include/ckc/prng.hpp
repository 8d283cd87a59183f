#pragma once

#include <cstdint>
#include <string_view>

namespace ckc {

/// Counter-based generator: output i is a hash of (key, i), so streams can be
/// split by deriving fresh keys and replayed from the seed alone.
struct Prng {
  std::uint64_t key = 0;
  std::uint64_t ctr = 0;

  Prng() = default;
  explicit Prng(std::uint64_t k) : key(k) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a + 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full + 0x165667B19E3779F9ull));
  }

  std::uint64_t next() { return hash2(key, ctr++); }

  /// Uniform in [0, n), unbiased by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t lim = n * ((~0ull) / n);
    std::uint64_t v = next();
    while (v >= lim) v = next();
    return v % n;
  }

  Prng derive(std::uint64_t tag) const { return Prng(hash2(key ^ 0xD6E8FEB86659FD93ull, tag)); }

  Prng derive(std::string_view label) const {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char ch : label) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001B3ull;
    }
    return derive(h);
  }
};

}  // namespace ckc
