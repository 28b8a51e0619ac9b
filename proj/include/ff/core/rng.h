#pragma once

#include <cmath>
#include <cstdint>

namespace ff {

// Deterministic generator used wherever reproducibility across platforms
// matters (mock generation, synthetic panels, test fixtures). splitmix64
// core with a Box-Muller normal; standard-library distributions are not
// byte-stable across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t NextU64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double Uniform01() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Inclusive-bounds uniform integer.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(NextU64() % span);
  }

  double Normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = Uniform01();
    double u2 = Uniform01();
    while (u1 <= 0.0) {
      u1 = Uniform01();
    }
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable derivation of stream seeds, so independent phases (round, batch)
// draw from disjoint deterministic streams.
inline std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
  Rng mixer(base ^ (0xA0761D6478BD642FULL * (stream + 1)));
  return mixer.NextU64();
}

}  // namespace ff
