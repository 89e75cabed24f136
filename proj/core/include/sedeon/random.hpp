#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "sedeon/sedeon.hpp"

namespace sedeon {

/// Seeded generator for test and benchmark inputs. Same seed, same sequence.
class SedeonSampler {
 public:
  explicit SedeonSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// Components uniform on the square [-1, 1] x [-1, 1].
  Sedeon sedeon() {
    Sedeon s;
    for (std::size_t i = 0; i < Sedeon::kSize; ++i) s.flat(i) = Complex{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    return s;
  }

  /// Components of modulus one with uniform phase.
  Sedeon unit_modulus_sedeon() {
    Sedeon s;
    for (std::size_t i = 0; i < Sedeon::kSize; ++i) s.flat(i) = std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi));
    return s;
  }

  Vec3 unit_vector() {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
      Vec3 v{normal(engine_), normal(engine_), normal(engine_)};
      const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (len > 1e-3) return {v[0] / len, v[1] / len, v[2] / len};
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sedeon
