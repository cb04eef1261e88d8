#pragma once

#include <cstdint>

namespace constel {

/// Deterministic splittable random stream built on the splitmix64 mixer.
///
/// The draw sequence is a pure function of the seed: output t is
/// mix(seed + t*gamma), so identical seeds reproduce identical sequences on
/// every platform. Substreams for Monte Carlo iterations are derived by
/// avalanche-mixing (seed, index) into a fresh state with a distinct salt,
/// which places each substream at an unrelated position of the underlying
/// sequence; windows of practical length collide with probability ~2^-64.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) noexcept
      : seed_(seed), state_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Independent child stream for the given index. Pure in (seed, index);
  /// unaffected by how much of this stream has been consumed.
  RandomStream substream(std::uint64_t index) const noexcept {
    return RandomStream(mix(mix(seed_ + kGolden * (index + 1)) ^ kStreamSalt));
  }

  std::uint64_t next_u64() noexcept { return mix(state_ += kGolden); }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in {0, ..., n-1} (multiply-shift; bias < n/2^64).
  std::uint64_t next_below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool next_bool() noexcept { return (next_u64() >> 63) != 0; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kStreamSalt = 0x1F83D9ABFB41BD6Bull;

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace constel
