#pragma once

#include <array>
#include <cstdint>

#include "bsppcc/normal.hpp"

namespace bsppcc {

/// Philox-4x32-10 counter-based generator. Each key selects an independent
/// stream of 2^130 values, so substreams derived from distinct keys never
/// overlap. One instance per owner; never share across threads.
class Philox {
 public:
  explicit Philox(std::uint64_t key)
      : key_{static_cast<std::uint32_t>(key),
             static_cast<std::uint32_t>(key >> 32)} {}

  std::uint64_t next_u64() {
    if (spent_ == 2) {
      fill();
      spent_ = 0;
    }
    return out_[spent_++];
  }

  /// Uniform on (0, 1); 52 random bits mapped to bin centers, so neither
  /// endpoint is reachable and the quantile transform stays finite.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1p-52;
  }

  /// Standard normal draw by quantile inversion.
  double next_normal() { return std_normal_quantile(next_uniform()); }

 private:
  void fill() {
    std::uint32_t x0 = ctr_[0], x1 = ctr_[1], x2 = ctr_[2], x3 = ctr_[3];
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * x0;
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * x2;
      x0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
      x1 = static_cast<std::uint32_t>(p1);
      x2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
      x3 = static_cast<std::uint32_t>(p0);
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    out_[0] = x0 | (std::uint64_t{x1} << 32);
    out_[1] = x2 | (std::uint64_t{x3} << 32);
    if (++ctr_[0] == 0 && ++ctr_[1] == 0 && ++ctr_[2] == 0) ++ctr_[3];
  }

  std::array<std::uint32_t, 4> ctr_{};
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint64_t, 2> out_{};
  int spent_ = 2;
};

/// SplitMix64 step: bijective mix with full avalanche.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Stream key for one simulation chunk. Keyed by (seed, n, chunk) so the
/// partition of work is independent of the worker count.
inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t n,
                                   std::uint64_t chunk) {
  return mix64(mix64(mix64(seed) ^ n) ^ chunk);
}

}  // namespace bsppcc
