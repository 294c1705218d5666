#ifndef BDSPECTRA_RNG_HPP
#define BDSPECTRA_RNG_HPP

#include <cmath>
#include <cstdint>

namespace bdspectra {

// SplitMix64: counter-based 64-bit generator. The state advances by a fixed
// odd constant and the output is a bijective mix of the state, so streams are
// reproducible from the seed alone and cheap to split.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kSplitMix64Gamma;
    return splitmix64_mix(state_);
  }

  // Uniform on (0, 1]; safe to pass through log().
  double next_open_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_exponential(double rate) { return -std::log(next_open_unit()) / rate; }

  std::uint64_t operator()() { return next_u64(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ULL; }

 private:
  std::uint64_t state_;
};

// Seed-splitting rule used for per-trajectory streams: seed_i = mix64(seed, i).
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
  return splitmix64_mix(seed + (index + 1) * kSplitMix64Gamma);
}

}  // namespace bdspectra

#endif
