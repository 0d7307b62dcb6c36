#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace equibound {

/// Counter-based random stream for one Monte Carlo draw.
///
/// The stream for draw i under master seed s is a splitmix64 sequence whose
/// starting state depends only on (s, i). Chunked parallel generation is
/// therefore bit-identical to sequential generation regardless of how draws
/// are assigned to workers.
class DrawStream {
 public:
  DrawStream(std::uint64_t seed, std::uint64_t draw_index)
      : state_(mix(seed ^ mix(draw_index + 0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in (0, 1].
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (platform-independent, unlike
  /// std::normal_distribution).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace equibound
