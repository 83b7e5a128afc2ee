#include "bidisk/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bidisk/metrics.hpp"

namespace bidisk {

Json ExtremalResult::to_json() const {
  Json rows = Json::array();
  for (const auto& [it, v] : trace) rows.push_back(Json::array({it, v}));
  return Json{{"best_value", best_value}, {"argument", argument},
              {"iterations", iterations}, {"seed", seed},
              {"found", found},           {"inconsistent", inconsistent},
              {"trace", rows}};
}

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Denominators below this are rejected: the ratio becomes fp noise there,
// and the diagonal restart family already realizes sqrt(2) - O(1e-6) at the
// floor separation.
constexpr double min_denominator = 1e-3;

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  bool exhausted() const { return used >= limit; }
  bool take() {
    if (exhausted()) return false;
    ++used;
    return true;
  }
};

// Coordinate-wise pattern search: probe +/- h per coordinate, keep strict
// improvements, halve the step when a full sweep stalls. Each objective
// evaluation consumes budget.
void pattern_search(std::vector<double>& x, double& best,
                    const std::function<double(const std::vector<double>&)>& eval,
                    Budget& budget, const std::function<void(double)>& on_improve) {
  double h = 0.25;
  while (h > 1e-7 && !budget.exhausted() && !x.empty()) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size() && !budget.exhausted(); ++i) {
      for (double sign : {1.0, -1.0}) {
        if (!budget.take()) break;
        double saved = x[i];
        x[i] = saved + sign * h;
        double v = eval(x);
        if (v > best) {
          best = v;
          on_improve(v);
          improved = true;
          break;
        }
        x[i] = saved;
      }
    }
    if (!improved) h *= 0.5;
  }
}

// Reads a bidisk point out of four reals, radially projected into the disk.
DiskPoint disk_from(double re, double im) {
  Complex c(re, im);
  double r = std::abs(c);
  if (r > 0.995) c *= 0.995 / r;
  return DiskPoint(c);
}

BiPoint bipoint_from(const std::vector<double>& v, std::size_t at) {
  return BiPoint(disk_from(v[at], v[at + 1]), disk_from(v[at + 2], v[at + 3]));
}

void push_bipoint(std::vector<double>& v, const BiPoint& p) {
  v.push_back(p.first.value().real());
  v.push_back(p.first.value().imag());
  v.push_back(p.second.value().real());
  v.push_back(p.second.value().imag());
}

// -- seto ratio -----------------------------------------------------------------

struct SetoState {
  HoloMap2 map = HoloMap2::identity();
  BiPoint p, q;
};

double seto_objective(const KernelSpec& k, const HoloMap2& F, const BiPoint& p,
                      const BiPoint& q) {
  try {
    double rhs = dk_tensor2(k, p, q);
    if (rhs < min_denominator) return neg_inf;
    double lhs = dk_tensor2(k, eval2_point(F, p), eval2_point(F, q));
    return lhs / rhs;
  } catch (const boundary_degeneracy&) {
    return neg_inf;
  } catch (const numeric_error&) {
    return neg_inf;
  }
}

SetoState seto_restart(std::uint64_t index, std::uint64_t& diagonal_count, Rng& rng,
                       MapFamily family) {
  SetoState s;
  if (index == 0) {
    // Identity with a fixed separated pair: ratio exactly 1.
    s.p = BiPoint(Complex(0.5, 0.0), Complex(0.0, 0.0));
    s.q = BiPoint(Complex(0.0, 0.0), Complex(0.0, 0.0));
    return s;
  }
  if (family == MapFamily::AutomorphismsOnly) {
    s.map = random_bidisk_automorphism(rng).to_map();
    s.p = rng.bipoint();
    s.q = rng.bipoint();
    return s;
  }
  switch (index % 3) {
    case 1: {
      // Diagonal family with shrinking separation: ratio sqrt(2 - t^2) for
      // n = 1, approaching sqrt(2) until t reaches the denominator floor.
      double t = std::max(min_denominator, 0.6 * std::pow(0.55, double(diagonal_count)));
      ++diagonal_count;
      s.map = HoloMap2::diagonal(1);
      s.p = BiPoint(Complex(t, 0.0), Complex(0.0, 0.0));
      s.q = BiPoint(Complex(0.0, 0.0), Complex(0.0, 0.0));
      return s;
    }
    case 2:
      s.map = random_selfmap_bidisk(rng, 2);
      s.p = rng.bipoint();
      s.q = rng.bipoint();
      return s;
    default:
      s.map = random_selfmap_bidisk(rng, 3);
      s.p = rng.bipoint();
      s.q = rng.bipoint();
      return s;
  }
}

}  // namespace

ExtremalResult maximize_seto_ratio(int n, std::uint64_t budget_limit, Seed seed,
                                   MapFamily family) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("maximize_seto_ratio: n must lie in [1,8]");
  if (budget_limit < 1)
    throw std::invalid_argument("maximize_seto_ratio: budget must be >= 1");

  KernelSpec k = KernelSpec::szego_power(n);
  ExtremalResult r;
  r.seed = seed;
  Budget budget{budget_limit};
  Rng rng(derive_seed(seed, 0));

  double best = neg_inf;
  SetoState state;
  auto improve = [&](double v, const SetoState& s) {
    best = v;
    state = s;
    r.trace.emplace_back(budget.used, v);
  };

  // Restart phase: at most half the budget, capped candidate count.
  std::uint64_t restarts =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(240, budget_limit / 2));
  std::uint64_t diagonal_count = 0;
  for (std::uint64_t i = 0; i < restarts && budget.take(); ++i) {
    SetoState s = seto_restart(i, diagonal_count, rng, family);
    double v = seto_objective(k, s.map, s.p, s.q);
    if (v > best) improve(v, s);
  }

  // Refinement phase: pattern search over point coordinates and the
  // continuous parameters of the incumbent map.
  if (best > neg_inf && !budget.exhausted()) {
    std::vector<double> x;
    push_bipoint(x, state.p);
    push_bipoint(x, state.q);
    for (double v : map_parameters(state.map)) x.push_back(v);
    HoloMap2 shape = state.map;  // fixed tree structure, parameters vary

    auto eval = [&](const std::vector<double>& v) {
      BiPoint p = bipoint_from(v, 0), q = bipoint_from(v, 4);
      try {
        HoloMap2 F = with_map_parameters(shape, {v.begin() + 8, v.end()});
        return seto_objective(k, F, p, q);
      } catch (const std::exception&) {
        return neg_inf;
      }
    };
    auto on_improve = [&](double v) {
      r.trace.emplace_back(budget.used, v);
    };
    pattern_search(x, best, eval, budget, on_improve);

    state.p = bipoint_from(x, 0);
    state.q = bipoint_from(x, 4);
    state.map = with_map_parameters(shape, {x.begin() + 8, x.end()});
  }

  r.best_value = best > neg_inf ? best : 0.0;
  r.iterations = budget.used;
  r.found = best > neg_inf;
  r.inconsistent = r.best_value > sqrt2 + 1e-9;
  r.argument = Json{{"kind", "seto_ratio"},     {"n", n},
                    {"map", to_json(state.map)}, {"p", to_json(state.p)},
                    {"q", to_json(state.q)},     {"value", r.best_value}};
  return r;
}

// -- rho obstruction ---------------------------------------------------------------

namespace {

struct Quad {
  BiPoint z, w, zeta, lambda;
};

// Margin of the max-order violation, or -inf when the quadruple is not a
// valid obstruction (rho-order must hold, max-order must fail strictly).
double obstruction_margin(const Quad& Q) {
  double rho_nodes = rho(Q.z, Q.w);
  double rho_targets = rho(Q.zeta, Q.lambda);
  if (rho_targets > rho_nodes) return neg_inf;
  double margin =
      mobius_distance_bidisk(Q.zeta, Q.lambda) - mobius_distance_bidisk(Q.z, Q.w);
  return margin > 0.0 ? margin : neg_inf;
}

// Structured family: nodes differing by t in both coordinates (rho =
// sqrt(2t^2 - t^4), max = t), targets differing by s in one coordinate
// (rho = max = s), with t < s <= sqrt(2t^2 - t^4).
Quad structured_quad(double t, double s, double alpha, double beta, double gamma) {
  Quad Q;
  Q.z = BiPoint(Complex(0.0, 0.0), Complex(0.0, 0.0));
  Q.w = BiPoint(std::polar(t, alpha), std::polar(t, beta));
  Q.zeta = Q.z;
  Q.lambda = BiPoint(std::polar(s, gamma), Complex(0.0, 0.0));
  return Q;
}

}  // namespace

ExtremalResult find_rho_obstruction(std::uint64_t budget_limit, Seed seed) {
  ExtremalResult r;
  r.seed = seed;
  r.found = false;
  Budget budget{budget_limit};
  Rng rng(derive_seed(seed, 0));

  double best = neg_inf;
  Quad state;
  auto improve = [&](double v, const Quad& Q) {
    best = v;
    state = Q;
    r.trace.emplace_back(budget.used, v);
  };

  // Candidate phase: structured draws interleaved with uniform noise.
  std::uint64_t candidates = std::max<std::uint64_t>(
      1, budget_limit - std::min<std::uint64_t>(budget_limit / 4, 2000));
  for (std::uint64_t i = 0; i < candidates && budget.take(); ++i) {
    Quad Q;
    if (i % 4 != 3) {
      double t = rng.uniform(0.05, 0.9);
      double smax = std::min(std::sqrt(2.0 * t * t - std::pow(t, 4)), 0.99);
      double s = t + rng.uniform01() * (smax - t);
      bool phases = i % 4 == 1 || i % 4 == 2;
      double a = phases ? rng.angle() : 0.0;
      double b = phases ? rng.angle() : 0.0;
      double g = phases ? rng.angle() : 0.0;
      Q = structured_quad(t, s, a, b, g);
    } else {
      Q = Quad{rng.bipoint(), rng.bipoint(), rng.bipoint(), rng.bipoint()};
    }
    double v = obstruction_margin(Q);
    if (v > best) improve(v, Q);
  }

  // Refinement phase: all sixteen coordinates, margin objective.
  if (best > neg_inf && !budget.exhausted()) {
    std::vector<double> x;
    push_bipoint(x, state.z);
    push_bipoint(x, state.w);
    push_bipoint(x, state.zeta);
    push_bipoint(x, state.lambda);
    auto eval = [&](const std::vector<double>& v) {
      Quad Q{bipoint_from(v, 0), bipoint_from(v, 4), bipoint_from(v, 8),
             bipoint_from(v, 12)};
      return obstruction_margin(Q);
    };
    auto on_improve = [&](double v) { r.trace.emplace_back(budget.used, v); };
    pattern_search(x, best, eval, budget, on_improve);
    state = Quad{bipoint_from(x, 0), bipoint_from(x, 4), bipoint_from(x, 8),
                 bipoint_from(x, 12)};
  }

  r.iterations = budget.used;
  r.found = best > neg_inf;
  r.best_value = r.found ? best : 0.0;
  if (r.found) {
    r.argument = Json{{"kind", "obstruction"},
                      {"z", to_json(state.z)},
                      {"w", to_json(state.w)},
                      {"zeta", to_json(state.zeta)},
                      {"lambda", to_json(state.lambda)},
                      {"rho_nodes", double(rho(state.z, state.w))},
                      {"rho_targets", double(rho(state.zeta, state.lambda))},
                      {"value", r.best_value}};
  } else {
    r.argument = Json{{"kind", "obstruction"}, {"found", false}};
  }
  return r;
}

// -- Mobius distance estimate ---------------------------------------------------------

namespace {

double pulled_back_or_neg_inf(const ScalarMap2& phi, const BiPoint& p, const BiPoint& q) {
  Complex a = eval_scalar2(phi, p);
  Complex b = eval_scalar2(phi, q);
  if (std::abs(a) >= 1.0 - eps_boundary || std::abs(b) >= 1.0 - eps_boundary)
    return neg_inf;
  return pseudo_hyperbolic(DiskPoint(a), DiskPoint(b));
}

}  // namespace

ExtremalResult estimate_mobius_distance(const BiPoint& p, const BiPoint& q,
                                        std::uint64_t budget_limit, Seed seed) {
  if (budget_limit < 1)
    throw std::invalid_argument("estimate_mobius_distance: budget must be >= 1");

  ExtremalResult r;
  r.seed = seed;
  Budget budget{budget_limit};
  Rng rng(derive_seed(seed, 0));

  double best = neg_inf;
  ScalarMap2 state = ScalarMap2::project(1);
  auto consider = [&](const ScalarMap2& phi) {
    if (!budget.take()) return;
    double v = pulled_back_or_neg_inf(phi, p, q);
    if (v > best) {
      best = v;
      state = phi;
      r.trace.emplace_back(budget.used, v);
    }
  };

  consider(ScalarMap2::project(1));
  consider(ScalarMap2::project(2));
  std::uint64_t random_candidates = std::min<std::uint64_t>(500, budget_limit / 2);
  for (std::uint64_t i = 0; i < random_candidates && !budget.exhausted(); ++i)
    consider(random_scalar_map2(rng, 2));

  if (best > neg_inf && !budget.exhausted()) {
    std::vector<double> x = map_parameters(state);
    ScalarMap2 shape = state;
    auto eval = [&](const std::vector<double>& v) {
      try {
        return pulled_back_or_neg_inf(with_map_parameters(shape, v), p, q);
      } catch (const std::exception&) {
        return neg_inf;
      }
    };
    auto on_improve = [&](double v) { r.trace.emplace_back(budget.used, v); };
    pattern_search(x, best, eval, budget, on_improve);
    state = with_map_parameters(shape, x);
  }

  r.best_value = best > neg_inf ? best : 0.0;
  r.iterations = budget.used;
  r.found = best > neg_inf;
  r.inconsistent = r.best_value > mobius_distance_bidisk(p, q) + 1e-9;
  r.argument = Json{{"kind", "mobius_estimate"},
                    {"p", to_json(p)},
                    {"q", to_json(q)},
                    {"map", to_json(state)},
                    {"value", r.best_value}};
  return r;
}

}  // namespace bidisk
