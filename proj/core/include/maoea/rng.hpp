#pragma once

#include <cstddef>
#include <cstdint>

namespace maoea {

/// Counter-based 64-bit generator. Draw i of a stream is a fixed bijective mix
/// of (key, i), so sequences are identical on every platform and independent
/// substreams are derived by hashing a stream id into the key.
///
/// Single owner: never share one stream across threads, split it instead.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream = 0) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n) noexcept;

  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal() noexcept;

  /// Independent child stream; does not advance this stream.
  [[nodiscard]] RngStream split(std::uint64_t stream_id) const noexcept;

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  // UniformRandomBitGenerator surface, for std::shuffle and friends.
  using result_type = std::uint64_t;
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next_u64(); }

private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace maoea
