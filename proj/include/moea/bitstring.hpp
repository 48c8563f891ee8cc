#pragma once

#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moea/random.hpp"

namespace moea {

/// Fixed-length binary decision vector packed into 64-bit words.
///
/// Length is fixed at construction. Position 0 is the leftmost character of
/// the string form. Popcount and run-length queries over arbitrary ranges are
/// word-level primitives so evaluation stays cheap at 10^6+ calls.
class Bitstring {
 public:
  explicit Bitstring(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
    if (n == 0) throw std::invalid_argument("Bitstring: length must be positive");
  }

  static Bitstring from_string(std::string_view s) {
    Bitstring x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        x.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("Bitstring: string must contain only 0/1");
      }
    }
    return x;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v) {
    assert(i < n_);
    const std::uint64_t mask = 1ull << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) {
    assert(i < n_);
    words_[i >> 6] ^= 1ull << (i & 63);
  }

  std::size_t count_ones() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Number of 1-bits in [first, first+len).
  std::size_t count_ones(std::size_t first, std::size_t len) const {
    assert(first + len <= n_);
    std::size_t c = 0;
    std::size_t i = first;
    const std::size_t end = first + len;
    while (i < end) {
      const std::size_t take = end - i < 64 ? end - i : 64;
      c += static_cast<std::size_t>(std::popcount(slice(i, take)));
      i += take;
    }
    return c;
  }

  /// Length of the run of consecutive 1-bits starting at `first`, capped at len.
  std::size_t run_of_ones(std::size_t first, std::size_t len) const {
    assert(first + len <= n_);
    std::size_t run = 0;
    std::size_t i = first;
    const std::size_t end = first + len;
    while (i < end) {
      const std::size_t take = end - i < 64 ? end - i : 64;
      const auto ones = static_cast<std::size_t>(std::countr_one(slice(i, take)));
      run += ones < take ? ones : take;
      if (ones < take) break;
      i += take;
    }
    return run;
  }

  /// Length of the run of consecutive 0-bits ending at `first+len-1`, scanning
  /// downward, capped at len.
  std::size_t run_of_trailing_zeros(std::size_t first, std::size_t len) const {
    assert(first + len <= n_);
    std::size_t run = 0;
    std::size_t hi = first + len;
    while (hi > first) {
      const std::size_t take = hi - first < 64 ? hi - first : 64;
      std::uint64_t top_aligned = slice(hi - take, take);
      if (take < 64) top_aligned <<= 64 - take;
      const auto zeros = static_cast<std::size_t>(std::countl_zero(top_aligned));
      run += zeros < take ? zeros : take;
      if (zeros < take) break;
      hi -= take;
    }
    return run;
  }

  /// Overwrite with independent fair coin flips.
  void assign_random(RandomSource& rng) {
    for (auto& w : words_) w = rng.next_u64();
    mask_top();
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Bitstring&) const = default;

 private:
  /// Low `take` bits = bits [pos, pos+take); take in [1,64].
  std::uint64_t slice(std::size_t pos, std::size_t take) const {
    const std::size_t w = pos >> 6;
    const std::size_t off = pos & 63;
    std::uint64_t chunk = words_[w] >> off;
    if (off != 0 && w + 1 < words_.size()) chunk |= words_[w + 1] << (64 - off);
    if (take < 64) chunk &= (1ull << take) - 1;
    return chunk;
  }

  void mask_top() {
    const std::size_t rem = n_ & 63;
    if (rem != 0) words_.back() &= (1ull << rem) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// Uniform random bitstring of length n; each bit is 1 with probability 1/2.
inline Bitstring random_bitstring(std::size_t n, RandomSource& rng) {
  Bitstring x(n);  // rejects n == 0
  x.assign_random(rng);
  return x;
}

/// Standard bit-wise mutation: each position flips independently with
/// probability 1/n. Implemented by geometric gap sampling, so the number of
/// RNG draws is proportional to the number of flips, not to n.
inline Bitstring bitwise_mutate(const Bitstring& x, RandomSource& rng) {
  const std::size_t n = x.size();
  Bitstring y = x;
  if (n == 1) {  // flip probability 1/n = 1
    y.flip(0);
    return y;
  }
  const double log_keep = std::log1p(-1.0 / static_cast<double>(n));
  std::size_t i = 0;
  while (i < n) {
    const double u = rng.next_double();
    const double gap = std::floor(std::log1p(-u) / log_keep);
    if (gap >= static_cast<double>(n - i)) break;
    i += static_cast<std::size_t>(gap);
    y.flip(i);
    ++i;
  }
  return y;
}

/// One-bit mutation: flips exactly one uniformly chosen position.
inline Bitstring onebit_mutate(const Bitstring& x, RandomSource& rng) {
  Bitstring y = x;
  y.flip(rng.next_below(x.size()));
  return y;
}

}  // namespace moea
