#pragma once

// Reproducible randomness: std::mt19937_64 streams keyed by SplitMix64-derived
// child seeds. The same (master seed, stream index) always gives the same
// stream on every platform.

#include <cstdint>
#include <random>
#include <string_view>

namespace chg {

inline constexpr std::string_view kRngName = "mt19937_64+splitmix64/v1";

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Seed of stream `index` derived from `master`.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chg
