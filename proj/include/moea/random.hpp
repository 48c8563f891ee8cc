#pragma once

#include <array>
#include <cstdint>

namespace moea {

/// SplitMix64 finalizer. Used for seed expansion and stream derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic sub-stream seed from (master seed, stream index, substream index).
/// Trials keyed this way are independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t substream = 0) {
  return mix64(mix64(mix64(master) ^ stream) ^ substream);
}

/// xoshiro256** generator seeded through SplitMix64.
///
/// Identical seeds yield identical draw sequences on every platform; bounded
/// draws use rejection sampling instead of std distributions, whose output is
/// implementation-defined. One RandomSource per logical run, never shared.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) {
      w = mix64(s);
      s = w;
    }
    state_[0] |= 1;  // xoshiro state must not be all zero
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0,1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Independent child stream; deterministic in (this seed, stream index).
  RandomSource split(std::uint64_t stream) const {
    return RandomSource(derive_seed(seed_, stream));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace moea
