#include "bidisk/kernels.hpp"

namespace bidisk {

namespace {

using CLD = std::complex<long double>;

CLD to_ld(Complex z) { return CLD(z.real(), z.imag()); }

// Integer power by repeated multiplication; exact branch handling for the
// small exponents used here (log/exp would drag in branch cuts).
template <typename T>
T ipow(T base, int n) {
  T acc = base;
  for (int i = 1; i < n; ++i) acc *= base;
  return acc;
}

CLD szego_ld(Complex z, Complex w) {
  CLD denom = CLD(1.0L, 0.0L) - std::conj(to_ld(w)) * to_ld(z);
  return CLD(1.0L, 0.0L) / denom;
}

}  // namespace

Complex szego_eval(DiskPoint z, DiskPoint w) {
  CLD k = szego_ld(z.value(), w.value());
  return Complex(static_cast<double>(k.real()), static_cast<double>(k.imag()));
}

Complex kernel_eval(const KernelSpec& k, DiskPoint x, DiskPoint y) {
  if (!k.on_disk())
    throw std::invalid_argument("kernel_eval: " + k.name() + " expects bidisk points");
  CLD v = ipow(szego_ld(x.value(), y.value()), k.power());
  return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

Complex kernel_eval(const KernelSpec& k, const BiPoint& x, const BiPoint& y) {
  if (!k.on_bidisk())
    throw std::invalid_argument("kernel_eval: " + k.name() + " expects disk points");
  CLD v1 = ipow(szego_ld(x.first.value(), y.first.value()), k.power());
  CLD v2 = ipow(szego_ld(x.second.value(), y.second.value()), k.power());
  CLD v = v1 * v2;
  return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

namespace {

template <typename Point>
Hermitian2 gram2_impl(const KernelSpec& k, const Point& x, const Point& y) {
  Complex kxx = kernel_eval(k, x, x);
  Complex kxy = kernel_eval(k, x, y);
  Complex kyy = kernel_eval(k, y, y);
  return Hermitian2(kxx.real(), kxy, kyy.real());
}

}  // namespace

Hermitian2 gram2(const KernelSpec& k, DiskPoint x, DiskPoint y) {
  return gram2_impl(k, x, y);
}

Hermitian2 gram2(const KernelSpec& k, const BiPoint& x, const BiPoint& y) {
  return gram2_impl(k, x, y);
}

bool strict_positivity_check(const Hermitian2& m, double tol) {
  return m.a11 > tol && m.det() > tol;
}

namespace detail {

long double szego_ratio(Complex x, Complex y) {
  // (1-|x|^2)(1-|y|^2) / |1 - conj(y) x|^2, the Szego case of
  // |k(x,y)|^2 / (k(x,x) k(y,y)).
  long double xr = x.real(), xi = x.imag();
  long double yr = y.real(), yi = y.imag();
  long double one_minus_x2 = 1.0L - (xr * xr + xi * xi);
  long double one_minus_y2 = 1.0L - (yr * yr + yi * yi);
  CLD denom = CLD(1.0L, 0.0L) - std::conj(CLD(yr, yi)) * CLD(xr, xi);
  long double d2 = denom.real() * denom.real() + denom.imag() * denom.imag();
  return (one_minus_x2 * one_minus_y2) / d2;
}

long double kernel_ratio(const KernelSpec& k, DiskPoint x, DiskPoint y) {
  if (!k.on_disk())
    throw std::invalid_argument("kernel_ratio: " + k.name() + " expects bidisk points");
  return ipow(szego_ratio(x.value(), y.value()), k.power());
}

long double kernel_ratio(const KernelSpec& k, const BiPoint& x, const BiPoint& y) {
  if (!k.on_bidisk())
    throw std::invalid_argument("kernel_ratio: " + k.name() + " expects disk points");
  long double r1 = szego_ratio(x.first.value(), y.first.value());
  long double r2 = szego_ratio(x.second.value(), y.second.value());
  return ipow(r1 * r2, k.power());
}

}  // namespace detail

}  // namespace bidisk
