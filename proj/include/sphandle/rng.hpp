#pragma once

#include <cstdint>
#include <random>

#include "sphandle/su2.hpp"
#include "sphandle/vec3.hpp"

namespace sphandle {

using Rng = std::mt19937_64;

// Decorrelates per-task streams derived from one user seed (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Vec3 random_unit_vec3(Rng& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (;;) {
    Vec3 v{unif(rng), unif(rng), unif(rng)};
    const double n2 = v.squared_norm();
    if (n2 > 1e-6 && n2 <= 1.0) return v / std::sqrt(n2);
  }
}

inline SpherePoint random_sphere_point(Rng& rng) {
  return SpherePoint{random_unit_vec3(rng)};
}

inline TangentVector random_tangent(Rng& rng, double r) {
  return TangentVector{random_unit_vec3(rng) * r};
}

inline UnitQuaternion random_unit_quaternion(Rng& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (;;) {
    const double w = unif(rng), x = unif(rng), y = unif(rng), z = unif(rng);
    const double n2 = w * w + x * x + y * y + z * z;
    if (n2 > 1e-6 && n2 <= 1.0) {
      const double inv = 1.0 / std::sqrt(n2);
      return {w * inv, x * inv, y * inv, z * inv};
    }
  }
}

}  // namespace sphandle
