#include "bidisk/pick.hpp"

#include <algorithm>
#include <cmath>

namespace bidisk {

namespace {

void require_closed_disk_target(Complex w, const char* who) {
  if (!is_finite(w) || std::abs(w) > 1.0)
    throw std::domain_error(std::string(who) + ": target outside the closed disk");
}

}  // namespace

PickProblem1::PickProblem1(DiskPoint x1_, DiskPoint x2_, Complex w1_, Complex w2_,
                           KernelSpec kernel_)
    : x1(x1_), x2(x2_), w1(w1_), w2(w2_), kernel(std::move(kernel_)) {
  require_closed_disk_target(w1, "PickProblem1");
  require_closed_disk_target(w2, "PickProblem1");
  if ((std::abs(w1) == 1.0 || std::abs(w2) == 1.0) && w1 != w2)
    throw std::domain_error("PickProblem1: unimodular targets must coincide");
  if (!kernel.on_disk())
    throw std::invalid_argument("PickProblem1: kernel must live on the disk");
}

Hermitian2 pick_matrix(const PickProblem1& P) {
  double k11 = kernel_eval(P.kernel, P.x1, P.x1).real();
  double k22 = kernel_eval(P.kernel, P.x2, P.x2).real();
  Complex k12 = kernel_eval(P.kernel, P.x1, P.x2);
  Hermitian2 M;
  M.a11 = (1.0 - std::norm(P.w1)) * k11;
  M.a22 = (1.0 - std::norm(P.w2)) * k22;
  M.a12 = (1.0 - P.w1 * std::conj(P.w2)) * k12;
  return M;
}

bool is_psd2(const Hermitian2& M, double tol) {
  double scale = std::max(1.0, M.a11 * M.a22);
  return M.a11 >= -tol && M.a22 >= -tol && M.det() >= -tol * scale;
}

bool solvable_two_point_disk(const PickProblem1& P) {
  if (!(P.kernel == KernelSpec::szego_power(1)))
    throw std::invalid_argument(
        "solvable_two_point_disk: only the Szego kernel carries the two-point "
        "Nevanlinna-Pick property here");
  return is_psd2(pick_matrix(P));
}

HoloMap1 interpolant_two_point_disk(const PickProblem1& P) {
  if (!solvable_two_point_disk(P))
    throw std::invalid_argument("interpolant_two_point_disk: problem is not solvable");
  if (std::abs(P.w1) >= 1.0 - eps_boundary || std::abs(P.w2) >= 1.0 - eps_boundary)
    throw std::domain_error("interpolant_two_point_disk: targets must be interior");

  Complex x1 = P.x1.value(), x2 = P.x2.value();
  MobiusParams b{x1, 0.0};        // kills x1
  MobiusParams bprime{P.w1, 0.0}; // kills w1

  Complex c(0.0, 0.0);
  if (x1 == x2) {
    if (P.w1 != P.w2)
      throw std::invalid_argument(
          "interpolant_two_point_disk: coincident nodes with distinct targets");
  } else {
    c = mobius_apply(bprime, P.w2) / mobius_apply(b, x2);
    double r = std::abs(c);
    if (r > 1.0) {
      if (r > 1.0 + 1e-12)
        throw std::invalid_argument("interpolant_two_point_disk: problem is not solvable");
      c /= r;
      // the division can overshoot by an ulp; shave until |c| <= 1 holds
      for (int guard = 0; std::abs(c) > 1.0; ++guard) {
        if (guard > 4) throw numeric_error("interpolant_two_point_disk: clamp failed");
        c *= 1.0 - 4e-16;
      }
    }
  }

  MobiusParams bprime_inv = mobius_inverse(bprime);
  HoloMap1 scaled = HoloMap1::pointwise_product(HoloMap1::constant(c),
                                                HoloMap1::mobius(b.a, b.theta));
  return HoloMap1::compose(HoloMap1::mobius(bprime_inv.a, bprime_inv.theta), scaled);
}

bool solvable_two_point_bidisk(const PickProblem2& P) {
  return mobius_distance_bidisk(P.zeta, P.lambda) <= mobius_distance_bidisk(P.p, P.q);
}

HoloMap2 interpolant_two_point_bidisk(const PickProblem2& P) {
  if (!solvable_two_point_bidisk(P))
    throw std::invalid_argument("interpolant_two_point_bidisk: problem is not solvable");

  double d1 = pseudo_hyperbolic(P.p.first, P.q.first);
  double d2 = pseudo_hyperbolic(P.p.second, P.q.second);
  int j = d2 > d1 ? 2 : 1;
  DiskPoint a = j == 1 ? P.p.first : P.p.second;
  DiskPoint b = j == 1 ? P.q.first : P.q.second;

  KernelSpec szego = KernelSpec::szego_power(1);
  HoloMap1 phi1 = interpolant_two_point_disk(
      PickProblem1(a, b, P.zeta.first.value(), P.lambda.first.value(), szego));
  HoloMap1 phi2 = interpolant_two_point_disk(
      PickProblem1(a, b, P.zeta.second.value(), P.lambda.second.value(), szego));

  ScalarMap2 pj = ScalarMap2::project(j);
  return HoloMap2(ScalarMap2::lift1(phi1, pj), ScalarMap2::lift1(phi2, pj), false);
}

}  // namespace bidisk
