#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bidisk/serialize.hpp"

// Property-based checks. Each check draws seeded random instances of an
// inequality that is an exact theorem, so the expected violation count is
// zero up to fp tolerance; a failure is an implementation defect. Checks are
// deterministic in (seed, config): trial i uses the stream derive_seed(seed, i),
// so results do not depend on execution order.

namespace bidisk {

struct PropertyCheck {
  std::string name;
  std::uint64_t trials = 0;     // requested
  std::uint64_t completed = 0;  // trials that produced a measurement
  std::uint64_t aborted = 0;    // trials dropped after the resample budget
  Seed seed = 0;
  double tolerance = 0.0;
  double worst_violation = 0.0;  // reported even on pass
  bool passed = true;
  bool vacuous = false;  // no completed trials; passes with a warning
  std::optional<Json> witness;  // present iff failed
  Json extra = Json::object();  // check-specific statistics

  Json to_json() const;
};

/// Per-trial resample budget when a map image degenerates to the boundary.
inline constexpr int resample_budget = 100;

/// Attainment slack for supremum checks whose extremal member is evaluated
/// explicitly; anything beyond fp noise means the member went missing.
inline constexpr double attain_tol = 1e-12;

/// d_{(k^n) tensor 2}(F p, F q) <= sqrt(2) d_{(k^n) tensor 2}(p, q) over
/// random self-maps of the bidisk. Requires n <= 8.
PropertyCheck check_seto(int n, std::uint64_t trials, Seed seed, double tol,
                         int map_depth = 3);

/// Coordinate-max distance never grows under holomorphic self-maps.
PropertyCheck check_mobius_contraction(std::uint64_t trials, Seed seed, double tol,
                                       int map_depth = 3);

/// Supremum of pulled-back disk distances over a generated scalar-map family
/// (projections included) matches the coordinate-max closed form: attained to
/// attain_tol, never exceeded by more than tol.
PropertyCheck check_product_property(std::uint64_t trials, Seed seed, double tol,
                                     std::uint64_t family_budget);

/// On the disk the same supremum over disk maps equals the pseudo-hyperbolic
/// distance; the attaining Mobius map is evaluated per trial.
PropertyCheck check_dx_equals_dk(std::uint64_t trials, Seed seed, double tol,
                                 std::uint64_t family_budget = 256);

/// d_D(phi(x), phi(y)) <= dk(Szego, x, y) for sup-norm-bounded phi.
PropertyCheck check_contractive_multiplier(std::uint64_t trials, Seed seed, double tol);

/// Power-kernel distances are ordered exactly as the base distances, n in
/// {2,...,6}; pairs inside the tol tie band are skipped, not adjudicated.
PropertyCheck check_power_lemma(std::uint64_t trials, Seed seed, double tol);

/// Scalar four-point inequality behind the main bound, on trials filtered to
/// max(|zeta|,|lambda|) <= max(|z|,|w|); `trials` counts accepted draws.
PropertyCheck check_sp_scalar(std::uint64_t trials, Seed seed, double tol);

struct VerifyConfig {
  Seed master_seed = 2026;
  double tolerance = 1e-9;
  int map_depth = 3;
  std::vector<int> seto_powers = {1, 2, 3};
  std::uint64_t trials_seto = 100000;
  std::uint64_t trials_mobius = 100000;
  std::uint64_t trials_product = 1000;
  std::uint64_t family_budget_product = 1000;
  std::uint64_t trials_dx = 10000;
  std::uint64_t family_budget_dx = 256;
  std::uint64_t trials_contractive = 100000;
  std::uint64_t trials_power = 100000;
  std::uint64_t trials_sp = 1000000;

  void validate() const;  // throws std::invalid_argument
  Json to_json() const;
};

/// Runs every check with seeds derived from the master seed.
std::vector<PropertyCheck> run_all(const VerifyConfig& config);

/// Full report: schema, resolved config, per-check results, aggregate flag.
Json verify_report(const VerifyConfig& config, const std::vector<PropertyCheck>& checks);

/// Recomputes the value a witness (from verify or extremal) asserts, so a
/// report alone suffices to reproduce a failure.
double replay_value(const Json& witness);

namespace detail {
/// Test seam: when set, replaces the image-side distance in check_seto.
/// A kernel-level sign flip cancels in the distance ratio, so injected
/// defects are expressed directly on the metric.
using SetoLhsFn = double (*)(const KernelSpec&, const BiPoint&, const BiPoint&);
SetoLhsFn& seto_lhs_hook();
}  // namespace detail

}  // namespace bidisk
