#pragma once

#include <cstdint>

namespace domclq {

// splitmix64 (Steele, Lea, Flood). The sequence depends only on the seed and
// uses nothing but 64-bit integer arithmetic, so it is identical everywhere.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kIncrement;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits scaled by 2^-53: uniform on [0, 1), exactly representable.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by multiply-shift; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// First output of a generator seeded with x; used to derive child seeds.
constexpr std::uint64_t splitmix64_hash(std::uint64_t x) noexcept { return SplitMix64(x).next(); }

}  // namespace domclq
