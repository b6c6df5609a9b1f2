#pragma once

#include <cstdint>

namespace sgconic {

/**
 * xorshift64* with a splitmix64-scrambled seed.
 *
 * Seeding:  z = seed + 0x9E3779B97F4A7C15
 *           z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *           z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *           state = z ^ (z >> 31), replaced by 0x9E3779B97F4A7C15 if zero.
 * Step:     x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
 *           output = x * 0x2545F4914F6CDD1D   (all mod 2^64)
 * uniform(lo, hi): n = hi - lo + 1; draw outputs until one is below
 *           2^64 - (2^64 mod n); return lo + output mod n.
 *
 * All arithmetic is on unsigned 64-bit integers, so the stream is identical
 * on every platform and easy to reproduce in other languages.
 */
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform integer in [lo, hi], by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t n = static_cast<std::uint64_t>(hi - lo) + 1;
    if (n == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = -(-n % n);  // 2^64 - (2^64 mod n), wraps to 0 when n divides 2^64
    std::uint64_t x = next();
    if (limit != 0)
      while (x >= limit) x = next();
    return lo + static_cast<std::int64_t>(x % n);
  }

 private:
  std::uint64_t state_;
};

}  // namespace sgconic
