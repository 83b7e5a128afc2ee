#pragma once

#include <cstdint>
#include <random>

#include "bidisk/core.hpp"

// Seeded, platform-stable randomness. mt19937_64 output is fully specified
// by the standard; we derive doubles by hand instead of going through
// std::uniform_real_distribution, whose algorithm is implementation-defined.

namespace bidisk {

using Seed = std::uint64_t;

// Standard splitmix64 step; used to derive independent per-check and
// per-trial seeds from a master seed.
inline Seed splitmix64(Seed& state) {
  Seed z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Seed derive_seed(Seed master, Seed stream) {
  Seed s = master ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull);
  splitmix64(s);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t bits() { return engine_(); }

  bool coin() { return (engine_() & 1u) != 0; }

  // Index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

  double angle() { return uniform(0.0, 6.283185307179586476925286766559); }

  // Area-uniform point of the disk of radius `cap`.
  Complex complex_in_disk(double cap = sample_radius_cap) {
    double r = cap * std::sqrt(uniform01());
    double th = angle();
    return Complex(r * std::cos(th), r * std::sin(th));
  }

  DiskPoint disk_point(double cap = sample_radius_cap) {
    return DiskPoint(complex_in_disk(cap));
  }

  BiPoint bipoint(double cap = sample_radius_cap) {
    DiskPoint a = disk_point(cap);
    DiskPoint b = disk_point(cap);
    return BiPoint(a, b);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bidisk
