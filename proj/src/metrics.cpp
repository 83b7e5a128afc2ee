#include "bidisk/metrics.hpp"

#include <algorithm>

namespace bidisk {

namespace {

// Funnel every distance construction through one clamp. The open-disk
// invariant keeps exact values inside [0, 1), but near-antipodal points by
// the boundary can round to 1.0 (and power/tensor forms reach 1.0 sooner);
// those nudge to the largest sub-1 double. Anything clearly outside the
// interval is an upstream invariant violation and surfaces as numeric_error.
DistanceValue as_distance(double v) {
  if (v < 0.0) {
    if (v < sqrt_clamp_floor) throw numeric_error("distance below zero");
    v = 0.0;
  } else if (v >= 1.0) {
    if (v > 1.0 + 1e-12) throw numeric_error("distance above one");
    v = std::nextafter(1.0, 0.0);
  }
  return DistanceValue(v);
}

}  // namespace

DistanceValue pseudo_hyperbolic(DiskPoint z, DiskPoint w) {
  if (z == w) return DistanceValue(0.0);
  Complex num = z.value() - w.value();
  Complex den = 1.0 - std::conj(w.value()) * z.value();
  return as_distance(std::abs(num) / std::abs(den));
}

DistanceValue dk(const KernelSpec& k, DiskPoint x, DiskPoint y) {
  long double r = detail::kernel_ratio(k, x, y);
  long double s = 1.0L - r;
  if (s < 0.0L) s = 0.0L;
  return as_distance(static_cast<double>(std::sqrt(s)));
}

DistanceValue dk(const KernelSpec& k, const BiPoint& x, const BiPoint& y) {
  long double r = detail::kernel_ratio(k, x, y);
  long double s = 1.0L - r;
  if (s < 0.0L) s = 0.0L;
  return as_distance(static_cast<double>(std::sqrt(s)));
}

DistanceValue dk_power_closed(DistanceValue t, int n) {
  if (n < 1) throw std::invalid_argument("dk_power_closed: power must be >= 1");
  double tv = t;
  if (tv == 0.0) return DistanceValue(0.0);
  if (n == 1) return t;
  // 1 - (1-t^2)^n evaluated as -expm1(n log1p(-t^2)): full relative accuracy
  // down to tiny t, where the direct subtraction would cancel.
  double s = -std::expm1(static_cast<double>(n) * std::log1p(-tv * tv));
  return as_distance(clamped_sqrt(std::min(s, 1.0)));
}

DistanceValue combine_tensor2(DistanceValue d1, DistanceValue d2) {
  double s = 1.0 - (1.0 - d1 * d1) * (1.0 - d2 * d2);
  return as_distance(clamped_sqrt(std::min(s, 1.0)));
}

DistanceValue dk_tensor2(const KernelSpec& k, const BiPoint& p, const BiPoint& q) {
  if (!k.on_disk())
    throw std::invalid_argument("dk_tensor2: base kernel must live on the disk");
  DistanceValue d1 = dk(k, p.first, q.first);
  DistanceValue d2 = dk(k, p.second, q.second);
  return combine_tensor2(d1, d2);
}

DistanceValue rho(const BiPoint& p, const BiPoint& q) {
  DistanceValue t1 = pseudo_hyperbolic(p.first, q.first);
  DistanceValue t2 = pseudo_hyperbolic(p.second, q.second);
  return combine_tensor2(t1, t2);
}

DistanceValue mobius_distance_bidisk(const BiPoint& p, const BiPoint& q) {
  DistanceValue t1 = pseudo_hyperbolic(p.first, q.first);
  DistanceValue t2 = pseudo_hyperbolic(p.second, q.second);
  return t1 >= t2 ? t1 : t2;
}

double caratheodory(double d) {
  if (!(d >= 0.0 && d < 1.0))
    throw std::domain_error("caratheodory: distance must lie in [0,1)");
  return std::atanh(d);
}

}  // namespace bidisk
