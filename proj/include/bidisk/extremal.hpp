#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bidisk/serialize.hpp"

// Derivative-free extremal search: multi-start over structured and random
// candidates followed by coordinate-wise pattern search. Used to approach
// the sharp constant sqrt(2) empirically and to hunt for rho-ordered point
// configurations that violate the coordinate-max order.

namespace bidisk {

struct ExtremalResult {
  double best_value = 0.0;
  Json argument = Json::object();  // kind-tagged witness, replayable
  std::uint64_t iterations = 0;    // objective evaluations consumed
  Seed seed = 0;
  bool found = true;          // obstruction search may legitimately not find
  bool inconsistent = false;  // best_value breached a proven upper bound
  // Monotone (iteration, best_value) trace; one row per improvement.
  std::vector<std::pair<std::uint64_t, double>> trace;

  Json to_json() const;
};

enum class MapFamily { Full, AutomorphismsOnly };

/// Maximizes dk_tensor2(k^n)(F p, F q) / dk_tensor2(k^n)(p, q) over maps and
/// point pairs. The restart schedule includes the diagonal family
/// F = (pi_1, pi_1), p = (t, 0), q = (0, 0) with shrinking t, whose ratio
/// sqrt(2 - t^2) approaches sqrt(2) from below, so with budget >= 10^4 the
/// result reaches at least sqrt(2) - 1e-3. A result above sqrt(2) + 1e-9 is
/// reported with the `inconsistent` flag set.
ExtremalResult maximize_seto_ratio(int n, std::uint64_t budget, Seed seed,
                                   MapFamily family = MapFamily::Full);

/// Searches for quadruples (z, w, zeta, lambda) with rho(zeta, lambda) <=
/// rho(z, w) but mobius_distance_bidisk(zeta, lambda) >
/// mobius_distance_bidisk(p, q), maximizing the max-order margin. Candidates
/// mix a structured two-coordinate-versus-one family with uniform noise;
/// `found = false` at tiny budgets is a legitimate outcome.
ExtremalResult find_rho_obstruction(std::uint64_t budget, Seed seed);

/// Lower bound for the bidisk Mobius distance via the supremum of
/// pulled-back disk distances over generated scalar maps (projections
/// included, so the coordinate-max closed form is attained). `inconsistent`
/// flags an excess beyond closed form + 1e-9.
ExtremalResult estimate_mobius_distance(const BiPoint& p, const BiPoint& q,
                                        std::uint64_t budget, Seed seed);

}  // namespace bidisk
