#pragma once

#include "bidisk/holomaps.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/metrics.hpp"

// Two-point Pick interpolation. On the disk the Pick matrix decides
// solvability for the Szego kernel and an explicit Mobius construction
// produces an interpolant; on the bidisk solvability reduces to the
// coordinate-max distance and the interpolant is built coordinatewise.

namespace bidisk {

/// Two nodes and two targets on the disk, with the kernel that scales the
/// Pick matrix. Targets live in the closed disk; a unimodular target is
/// accepted only when both targets coincide (forcing a constant).
struct PickProblem1 {
  PickProblem1(DiskPoint x1, DiskPoint x2, Complex w1, Complex w2, KernelSpec kernel);

  DiskPoint x1, x2;
  Complex w1, w2;
  KernelSpec kernel;
};

/// Two-point problem on the bidisk: nodes p, q and targets zeta, lambda.
struct PickProblem2 {
  BiPoint p, q;
  BiPoint zeta, lambda;
};

/// Default slack for positive-semidefiniteness decisions.
inline constexpr double psd_tol = 1e-12;

/// [[(1-|w1|^2) k(x1,x1), (1-w1 conj(w2)) k(x1,x2)], [conj, (1-|w2|^2) k(x2,x2)]]
Hermitian2 pick_matrix(const PickProblem1& P);

/// PSD test with slack relative to max(1, a11*a22).
bool is_psd2(const Hermitian2& M, double tol = psd_tol);

/// Pick criterion for the Szego kernel (the only kernel here with the
/// two-point Nevanlinna-Pick property); rejects other kernels.
bool solvable_two_point_disk(const PickProblem1& P);

/// Explicit interpolant phi with phi(x1) = w1, phi(x2) = w2:
/// phi = (b')^{-1} o (c b) with b, b' the Mobius maps killing x1, w1 and
/// c = b'(w2) / b(x2). Requires a solvable problem with interior targets.
HoloMap1 interpolant_two_point_disk(const PickProblem1& P);

/// Max-distance criterion on the bidisk.
bool solvable_two_point_bidisk(const PickProblem2& P);

/// Coordinatewise interpolant: each component is a disk interpolant
/// precomposed with the projection onto a coordinate attaining the node
/// separation.
HoloMap2 interpolant_two_point_bidisk(const PickProblem2& P);

}  // namespace bidisk
