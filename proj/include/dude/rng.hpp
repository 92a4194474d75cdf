#pragma once

#include <cmath>
#include <cstdint>

namespace dude {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// SplitMix64 finalizer; full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Sequential pseudo-random stream over a fixed 64-bit key (splitmix64).
class RngStream {
 public:
  explicit constexpr RngStream(std::uint64_t key) noexcept : state_(key) {}

  constexpr std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // uniform on [0, 1)
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform on (0, 1]; safe as a log() argument
  double next_double_open0() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // zero-mean Gaussian (Box-Muller)
  double next_gaussian(double stddev) noexcept {
    const double r = std::sqrt(-2.0 * std::log(next_double_open0()));
    return stddev * r * std::cos(kTwoPi * next_double());
  }

  // unit-mean exponential
  double next_exp() noexcept { return -std::log(next_double_open0()); }

  // uniform integer in [0, n), n >= 1
  std::uint32_t next_below(std::uint32_t n) noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Poisson count via cumulated unit exponentials; O(lambda) draws
  std::int64_t next_poisson(double lambda) noexcept {
    std::int64_t n = 0;
    double acc = next_exp();
    while (acc <= lambda) {
      ++n;
      acc += next_exp();
    }
    return n;
  }

 private:
  std::uint64_t state_;
};

// Hierarchical key derivation. Every consumer (drop, link, slot, cell)
// derives its own stream from a chain of words, so sampled values never
// depend on evaluation order or thread schedule.
class RngKey {
 public:
  explicit constexpr RngKey(std::uint64_t seed) noexcept
      : key_(mix64(seed + 0x9E3779B97F4A7C15ULL)) {}

  constexpr RngKey child(std::uint64_t word) const noexcept {
    RngKey k = *this;
    k.key_ = mix64((key_ ^ word) * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
    return k;
  }

  constexpr RngStream stream() const noexcept { return RngStream(key_); }
  constexpr std::uint64_t value() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

// Stream purposes hung off a per-drop key.
namespace stream_tag {
inline constexpr std::uint64_t deployment = 0xD0;
inline constexpr std::uint64_t shadowing = 0x5A;
inline constexpr std::uint64_t fading = 0xFA;
inline constexpr std::uint64_t schedule = 0x5C;
inline constexpr std::uint64_t filler = 0xF1;
}  // namespace stream_tag

}  // namespace dude
