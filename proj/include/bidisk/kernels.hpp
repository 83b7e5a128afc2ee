#pragma once

#include <string>

#include "bidisk/core.hpp"

// Reproducing kernels on the disk and bidisk: the Szego kernel, its integer
// powers (Bergman at n = 2), and tensor squares on the bidisk, together with
// 2x2 Gram matrices and the strict-positivity (point separation) test.

namespace bidisk {

/// Symbolic kernel descriptor. Either szego^n on the disk or the tensor
/// square base(x1,y1)*base(x2,y2) of a disk kernel on the bidisk.
class KernelSpec {
 public:
  enum class Kind { SzegoPower, TensorSquare };

  static KernelSpec szego_power(int n) {
    if (n < 1) throw std::invalid_argument("KernelSpec: power must be >= 1");
    return KernelSpec(Kind::SzegoPower, n);
  }

  static KernelSpec tensor_square(const KernelSpec& base) {
    if (base.kind() != Kind::SzegoPower)
      throw std::invalid_argument("KernelSpec: tensor square may only wrap a disk kernel");
    return KernelSpec(Kind::TensorSquare, base.power());
  }

  Kind kind() const { return kind_; }

  // The Szego power of the kernel itself (SzegoPower) or of its base factor
  // (TensorSquare).
  int power() const { return power_; }

  bool on_disk() const { return kind_ == Kind::SzegoPower; }
  bool on_bidisk() const { return kind_ == Kind::TensorSquare; }

  KernelSpec base() const {
    if (kind_ != Kind::TensorSquare)
      throw std::invalid_argument("KernelSpec: base() requires a tensor square");
    return szego_power(power_);
  }

  std::string name() const {
    std::string b = "szego^" + std::to_string(power_);
    return kind_ == Kind::SzegoPower ? b : "tensor2(" + b + ")";
  }

  friend bool operator==(const KernelSpec& a, const KernelSpec& b) {
    return a.kind_ == b.kind_ && a.power_ == b.power_;
  }

 private:
  KernelSpec(Kind kind, int power) : kind_(kind), power_(power) {}
  Kind kind_;
  int power_;
};

/// 2x2 Hermitian matrix [[a11, a12], [conj(a12), a22]]; only the upper
/// triangle is stored. Covers every Gram and Pick matrix that occurs here.
struct Hermitian2 {
  double a11 = 0.0;
  Complex a12{0.0, 0.0};
  double a22 = 0.0;

  Hermitian2() = default;
  Hermitian2(double d11, Complex off, double d22) : a11(d11), a12(off), a22(d22) {
    if (!std::isfinite(d11) || !std::isfinite(d22) || !is_finite(off))
      throw std::invalid_argument("Hermitian2: non-finite entry");
  }

  double det() const { return a11 * a22 - std::norm(a12); }
};

/// Szego kernel 1/(1 - conj(w) z).
Complex szego_eval(DiskPoint z, DiskPoint w);

/// Kernel value for a disk kernel. Throws if K lives on the bidisk.
Complex kernel_eval(const KernelSpec& k, DiskPoint x, DiskPoint y);

/// Kernel value for a bidisk (tensor square) kernel.
Complex kernel_eval(const KernelSpec& k, const BiPoint& x, const BiPoint& y);

/// Gram matrix [[K(x,x), K(x,y)], [conj, K(y,y)]].
Hermitian2 gram2(const KernelSpec& k, DiskPoint x, DiskPoint y);
Hermitian2 gram2(const KernelSpec& k, const BiPoint& x, const BiPoint& y);

/// True iff a11 > tol and det > tol: the matrix is strictly positive, which
/// is the matrix-level form of the kernel separating two points.
bool strict_positivity_check(const Hermitian2& m, double tol);

namespace detail {

// |K(x,y)|^2 / (K(x,x) K(y,y)) in extended precision. This is the quantity
// every kernel-induced distance is built from; the extra mantissa bits keep
// the later 1 - ratio subtraction accurate for nearby points.
long double kernel_ratio(const KernelSpec& k, DiskPoint x, DiskPoint y);
long double kernel_ratio(const KernelSpec& k, const BiPoint& x, const BiPoint& y);
long double szego_ratio(Complex x, Complex y);

}  // namespace detail

}  // namespace bidisk
