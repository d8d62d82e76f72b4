#include "maoea/rng.hpp"

#include <cmath>
#include <tuple>
#include <utility>
#include <numbers>

namespace maoea {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kStreamSalt = 0xd1b54a32d192ed03ULL;

constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed + kGolden) ^ mix64(stream * kStreamSalt + 1));
}
} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : seed_(seed), key_(derive_key(seed, stream)) {}

std::uint64_t RngStream::next_u64() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) noexcept {
  return lo + (hi - lo) * uniform();
}

namespace {

// Full 64x64 -> 128 product as (high, low).
std::pair<std::uint64_t, std::uint64_t> mul_wide(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t a_lo = a & 0xffffffffU;
  const std::uint64_t a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xffffffffU;
  const std::uint64_t b_hi = b >> 32;
  const std::uint64_t ll = a_lo * b_lo;
  const std::uint64_t lh = a_lo * b_hi;
  const std::uint64_t hl = a_hi * b_lo;
  const std::uint64_t hh = a_hi * b_hi;
  const std::uint64_t mid = (ll >> 32) + (lh & 0xffffffffU) + (hl & 0xffffffffU);
  const std::uint64_t high = hh + (lh >> 32) + (hl >> 32) + (mid >> 32);
  const std::uint64_t low = (mid << 32) | (ll & 0xffffffffU);
  return {high, low};
}

} // namespace

std::size_t RngStream::index(std::size_t n) noexcept {
  // Lemire's multiply-shift with rejection; unbiased.
  const auto bound = static_cast<std::uint64_t>(n);
  auto [high, low] = mul_wide(next_u64(), bound);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      std::tie(high, low) = mul_wide(next_u64(), bound);
    }
  }
  return static_cast<std::size_t>(high);
}

double RngStream::normal() noexcept {
  const double u1 = 1.0 - uniform(); // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::split(std::uint64_t stream_id) const noexcept {
  RngStream child(seed_);
  child.key_ = mix64(key_ ^ mix64(stream_id * kStreamSalt + kGolden));
  return child;
}

} // namespace maoea
