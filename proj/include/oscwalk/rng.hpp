#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>

namespace oscwalk {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Seed for the stream belonging to (base seed, sample index). Streams for
// distinct indices are decorrelated, so campaigns can fan out by index.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t s = base ^ ((index + 1) * 0x9E3779B97F4A7C15ull);
  return splitmix64_next(s);
}

// xoshiro256++ with splitmix64 state expansion. All draws are bit-exactly
// reproducible for a given seed, independent of platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased uniform draw from {0, ..., bound-1}; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Unbiased uniform draw from {0, ..., bound-1} for big-integer bounds,
  // by rejection on the bound's bit width.
  mpz_class below(const mpz_class& bound) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const mpz_class mask = (mpz_class(1) << bits) - 1;
    for (;;) {
      mpz_class r = 0;
      for (std::size_t w = 0; w < words; ++w) {
        r <<= 64;
        r += mpz_class(static_cast<unsigned long>(next()));
      }
      r &= mask;
      if (r < bound) return r;
    }
  }

  // 53-bit uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace oscwalk
