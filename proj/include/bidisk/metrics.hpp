#pragma once

#include "bidisk/core.hpp"
#include "bidisk/kernels.hpp"

// The pseudo-distances: pseudo-hyperbolic on the disk, the kernel distance
// d_k = sqrt(1 - |k(x,y)|^2/(k(x,x)k(y,y))), power and tensor closed forms,
// rho on the bidisk, the max-formula Mobius distance on the bidisk, and the
// Caratheodory rescaling atanh.

namespace bidisk {

/// |(z - w) / (1 - conj(w) z)|.
DistanceValue pseudo_hyperbolic(DiskPoint z, DiskPoint w);

/// Kernel distance computed from raw kernel values.
DistanceValue dk(const KernelSpec& k, DiskPoint x, DiskPoint y);
DistanceValue dk(const KernelSpec& k, const BiPoint& x, const BiPoint& y);

/// Closed form sqrt(1 - (1 - t^2)^n) for the distance of the n-th kernel
/// power, as a function of the base-kernel distance t.
DistanceValue dk_power_closed(DistanceValue t, int n);

/// Tensor combination sqrt(1 - (1 - d1^2)(1 - d2^2)) of two coordinate
/// distances. Shared by dk_tensor2 and rho.
DistanceValue combine_tensor2(DistanceValue d1, DistanceValue d2);

/// Tensor-square distance via per-coordinate kernel distances of the disk
/// kernel `k`, combined in closed form.
DistanceValue dk_tensor2(const KernelSpec& k, const BiPoint& p, const BiPoint& q);

/// The bidisk distance sqrt(t1^2 + t2^2 - t1^2 t2^2) built from the two
/// coordinate pseudo-hyperbolic distances.
DistanceValue rho(const BiPoint& p, const BiPoint& q);

/// max of the two coordinate pseudo-hyperbolic distances (the product
/// property form of the Mobius distance on the bidisk).
DistanceValue mobius_distance_bidisk(const BiPoint& p, const BiPoint& q);

/// atanh(d); rejects d outside [0, 1).
double caratheodory(double d);

}  // namespace bidisk
