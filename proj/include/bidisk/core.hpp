#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

// Core domain types shared by every module: points of the unit disk and
// bidisk, distance values, and the numeric conventions (boundary margin,
// square-root clamping) used throughout.

namespace bidisk {

using Complex = std::complex<double>;

// Points with |z| >= 1 - eps_boundary are rejected; kernel values blow up
// on the boundary and the theory lives on the open disk.
inline constexpr double eps_boundary = 1e-9;

// Random sampling stays inside |z| <= sample_radius_cap.
inline constexpr double sample_radius_cap = 0.999;

// Square roots of "nonnegative by theory" expressions clamp tiny negative
// arguments; anything below sqrt_clamp_floor is an internal inconsistency.
inline constexpr double sqrt_clamp_floor = -1e-15;

inline const double sqrt2 = std::sqrt(2.0);

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by eval2 when a map image lands within eps_boundary of the unit
// circle; callers resample rather than clamp.
struct boundary_degeneracy : std::runtime_error {
  explicit boundary_degeneracy(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// sqrt with the clamp convention above.
inline double clamped_sqrt(double s) {
  if (s < 0.0) {
    if (s < sqrt_clamp_floor)
      throw numeric_error("clamped_sqrt: argument " + std::to_string(s) +
                          " below clamp floor");
    s = 0.0;
  }
  return std::sqrt(s);
}

/// A point of the open unit disk. Construction validates the invariant.
class DiskPoint {
 public:
  DiskPoint() : value_(0.0, 0.0) {}
  explicit DiskPoint(Complex value) : value_(value) {
    if (!is_finite(value))
      throw std::domain_error("DiskPoint: non-finite coordinate");
    if (std::abs(value) >= 1.0 - eps_boundary)
      throw std::domain_error("DiskPoint: |z| = " + std::to_string(std::abs(value)) +
                              " too close to the unit circle");
  }
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const { return value_; }
  double abs() const { return std::abs(value_); }

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) {
    return a.value_ == b.value_;
  }

 private:
  Complex value_;
};

/// An ordered pair of disk points: an element of the bidisk.
struct BiPoint {
  DiskPoint first;
  DiskPoint second;

  BiPoint() = default;
  BiPoint(DiskPoint f, DiskPoint s) : first(f), second(s) {}
  BiPoint(Complex f, Complex s) : first(f), second(s) {}

  friend bool operator==(const BiPoint& a, const BiPoint& b) {
    return a.first == b.first && a.second == b.second;
  }
};

/// A pseudo-distance value in [0, 1). Implicitly converts to double.
class DistanceValue {
 public:
  DistanceValue() : value_(0.0) {}
  explicit DistanceValue(double v) : value_(v) {
    if (!(v >= 0.0 && v < 1.0))
      throw numeric_error("DistanceValue: " + std::to_string(v) + " outside [0,1)");
  }

  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  double value_;
};

}  // namespace bidisk
