// Command-line surface: distance evaluation, two-point Pick problems,
// property verification suites, extremal searches, and witness replay.
// Exit codes: 0 success/pass, 1 property failure, 2 usage or config error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bidisk/extremal.hpp"
#include "bidisk/metrics.hpp"
#include "bidisk/pick.hpp"
#include "bidisk/verify.hpp"

namespace {

using namespace bidisk;

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double parse_real(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("trailing characters in number: '" + s + "'");
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite number: '" + s + "'");
  return v;
}

// "a+bi" form: real, imaginary ("0.3i", "i", "-i"), or both. Exponent signs
// ("1e-3i") do not split the parts.
Complex parse_complex_ab(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return Complex(parse_real(s), 0.0);
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    char ch = s[k];
    if ((ch == '+' || ch == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  std::string im_str;
  if (split == std::string::npos) {
    im_str = s.substr(0, s.size() - 1);
  } else {
    re = parse_real(s.substr(0, split));
    im_str = s.substr(split, s.size() - 1 - split);
  }
  double im = 0.0;
  if (im_str.empty() || im_str == "+")
    im = 1.0;
  else if (im_str == "-")
    im = -1.0;
  else
    im = parse_real(im_str);
  return Complex(re, im);
}

// Disk contexts also accept the "a,b" pair form.
Complex parse_complex(const std::string& s) {
  std::size_t c = s.find(',');
  if (c == std::string::npos) return parse_complex_ab(s);
  if (s.find(',', c + 1) != std::string::npos)
    throw std::invalid_argument("too many commas in complex literal: '" + s + "'");
  return Complex(parse_real(s.substr(0, c)), parse_real(s.substr(c + 1)));
}

DiskPoint parse_disk_point(const std::string& s) { return DiskPoint(parse_complex(s)); }

// Bidisk points are comma-separated coordinate lists "z1,z2"; inside them
// each coordinate uses the a+bi form, since the comma is taken.
BiPoint parse_bipoint(const std::string& s) {
  std::size_t c = s.find(',');
  if (c == std::string::npos || s.find(',', c + 1) != std::string::npos)
    throw std::invalid_argument("bidisk point must have two coordinates: '" + s + "'");
  return BiPoint(DiskPoint(parse_complex_ab(s.substr(0, c))),
                 DiskPoint(parse_complex_ab(s.substr(c + 1))));
}

KernelSpec parse_kernel(const std::string& s) {
  if (s == "szego") return KernelSpec::szego_power(1);
  if (s.rfind("szego^", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(s.substr(6));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad kernel power: '" + s + "'");
    }
    return KernelSpec::szego_power(n);
  }
  throw std::invalid_argument("unknown kernel '" + s + "' (expected szego or szego^n)");
}

void write_json(const Json& j, const std::string& path) {
  std::string text = j.dump(2);
  text += '\n';
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output path: " + path);
  f << text;
  if (!f) throw std::invalid_argument("failed writing output path: " + path);
}

// --out always writes the file; --json additionally prints the report.
void emit_report(const Json& j, bool json_stdout, const std::string& out) {
  if (!out.empty()) write_json(j, out);
  if (json_stdout) write_json(j, "");
}

// -- dist ---------------------------------------------------------------------

struct DistOpts {
  std::string metric;
  std::vector<std::string> points;
  std::string kernel = "szego";
  bool json = false;
  std::string out;
};

int run_dist(const DistOpts& o) {
  Json inputs = Json::array();
  double value = 0.0;
  KernelSpec k = parse_kernel(o.kernel);

  if (o.metric == "pseudo-hyperbolic" || o.metric == "dk") {
    DiskPoint a = parse_disk_point(o.points[0]);
    DiskPoint b = parse_disk_point(o.points[1]);
    inputs.push_back(to_json(a));
    inputs.push_back(to_json(b));
    value = o.metric == "dk" ? dk(k, a, b) : pseudo_hyperbolic(a, b);
  } else if (o.metric == "rho" || o.metric == "dk-tensor2" || o.metric == "mobius-bidisk") {
    BiPoint p = parse_bipoint(o.points[0]);
    BiPoint q = parse_bipoint(o.points[1]);
    inputs.push_back(to_json(p));
    inputs.push_back(to_json(q));
    if (o.metric == "rho")
      value = rho(p, q);
    else if (o.metric == "dk-tensor2")
      value = dk_tensor2(k, p, q);
    else
      value = mobius_distance_bidisk(p, q);
  } else if (o.metric == "caratheodory") {
    // Coordinate lists mean the bidisk; single coordinates mean the disk.
    bool bidisk_mode = o.points[0].find(',') != std::string::npos;
    if (bidisk_mode != (o.points[1].find(',') != std::string::npos))
      throw std::invalid_argument("caratheodory: points must share a domain");
    if (bidisk_mode) {
      BiPoint p = parse_bipoint(o.points[0]);
      BiPoint q = parse_bipoint(o.points[1]);
      inputs.push_back(to_json(p));
      inputs.push_back(to_json(q));
      value = caratheodory(mobius_distance_bidisk(p, q));
    } else {
      DiskPoint a = parse_disk_point(o.points[0]);
      DiskPoint b = parse_disk_point(o.points[1]);
      inputs.push_back(to_json(a));
      inputs.push_back(to_json(b));
      value = caratheodory(pseudo_hyperbolic(a, b));
    }
  } else {
    throw std::invalid_argument("unknown metric '" + o.metric + "'");
  }

  Json report{{"schema", 1}, {"metric", o.metric}, {"inputs", inputs}, {"value", value}};
  if (o.metric == "dk" || o.metric == "dk-tensor2") report["kernel"] = k.name();
  emit_report(report, o.json, o.out);
  if (!o.json) std::cout << fmt15(value) << "\n";
  return 0;
}

// -- pick ---------------------------------------------------------------------

struct PickOpts {
  std::string x1, x2, w1, w2;
  std::string p, q, zeta, lambda;
  std::string kernel = "szego";
  bool construct = false;
  bool json = false;
  std::string out;
};

int run_pick_disk(const PickOpts& o) {
  KernelSpec k = parse_kernel(o.kernel);
  PickProblem1 P(parse_disk_point(o.x1), parse_disk_point(o.x2),
                 parse_complex(o.w1), parse_complex(o.w2), k);
  Hermitian2 M = pick_matrix(P);
  bool szego1 = k == KernelSpec::szego_power(1);
  bool psd = is_psd2(M);

  Json report{{"schema", 1},
              {"mode", "disk"},
              {"kernel", k.name()},
              {"x1", to_json(P.x1)},
              {"x2", to_json(P.x2)},
              {"w1", to_json(P.w1)},
              {"w2", to_json(P.w2)},
              {"matrix", Json{{"a11", M.a11}, {"a12", to_json(M.a12)}, {"a22", M.a22}}},
              {"det", M.det()},
              {"psd", psd}};
  if (szego1) report["solvable"] = psd;

  if (!o.json) {
    std::cout << "pick matrix: [[" << fmt15(M.a11) << ", " << fmt15(M.a12.real())
              << (M.a12.imag() < 0 ? "" : "+") << fmt15(M.a12.imag()) << "i], [conj, "
              << fmt15(M.a22) << "]]\n";
    std::cout << "det = " << fmt15(M.det()) << "\n";
    std::cout << (szego1 ? (psd ? "SOLVABLE" : "UNSOLVABLE") : (psd ? "PSD" : "NOT-PSD"))
              << "\n";
  }

  if (o.construct && szego1 && psd) {
    HoloMap1 phi = interpolant_two_point_disk(P);
    double r1 = std::abs(eval1(phi, P.x1) - P.w1);
    double r2 = std::abs(eval1(phi, P.x2) - P.w2);
    report["interpolant"] = to_json(phi);
    report["residuals"] = Json::array({r1, r2});
    if (!o.json)
      std::cout << "interpolant residuals: " << fmt15(r1) << ", " << fmt15(r2) << "\n";
  } else if (o.construct && !o.json) {
    std::cout << "no interpolant constructed\n";
  }

  emit_report(report, o.json, o.out);
  return 0;
}

int run_pick_bidisk(const PickOpts& o) {
  PickProblem2 P{parse_bipoint(o.p), parse_bipoint(o.q), parse_bipoint(o.zeta),
                 parse_bipoint(o.lambda)};
  double dn = mobius_distance_bidisk(P.p, P.q);
  double dt = mobius_distance_bidisk(P.zeta, P.lambda);
  bool solvable = solvable_two_point_bidisk(P);

  Json report{{"schema", 1},
              {"mode", "bidisk"},
              {"p", to_json(P.p)},
              {"q", to_json(P.q)},
              {"zeta", to_json(P.zeta)},
              {"lambda", to_json(P.lambda)},
              {"node_distance", dn},
              {"target_distance", dt},
              {"solvable", solvable}};

  if (!o.json) {
    std::cout << "node distance = " << fmt15(dn) << "\n";
    std::cout << "target distance = " << fmt15(dt) << "\n";
    std::cout << (solvable ? "SOLVABLE" : "UNSOLVABLE") << "\n";
  }

  if (o.construct && solvable) {
    HoloMap2 F = interpolant_two_point_bidisk(P);
    auto [a1, a2] = eval2(F, P.p);
    auto [b1, b2] = eval2(F, P.q);
    Json residuals = Json::array({std::abs(a1 - P.zeta.first.value()),
                                  std::abs(a2 - P.zeta.second.value()),
                                  std::abs(b1 - P.lambda.first.value()),
                                  std::abs(b2 - P.lambda.second.value())});
    report["interpolant"] = to_json(F);
    report["residuals"] = residuals;
    if (!o.json) std::cout << "interpolant residuals: " << residuals.dump() << "\n";
  } else if (o.construct && !o.json) {
    std::cout << "no interpolant constructed\n";
  }

  emit_report(report, o.json, o.out);
  return 0;
}

int run_pick(const PickOpts& o) {
  bool disk = !o.x1.empty() || !o.x2.empty() || !o.w1.empty() || !o.w2.empty();
  bool bidisk = !o.p.empty() || !o.q.empty() || !o.zeta.empty() || !o.lambda.empty();
  if (disk == bidisk)
    throw std::invalid_argument(
        "pick: give either --x1/--x2/--w1/--w2 (disk) or --p/--q/--zeta/--lambda (bidisk)");
  if (disk) {
    if (o.x1.empty() || o.x2.empty() || o.w1.empty() || o.w2.empty())
      throw std::invalid_argument("pick: disk problems need all of --x1 --x2 --w1 --w2");
    return run_pick_disk(o);
  }
  if (o.p.empty() || o.q.empty() || o.zeta.empty() || o.lambda.empty())
    throw std::invalid_argument("pick: bidisk problems need all of --p --q --zeta --lambda");
  return run_pick_bidisk(o);
}

// -- verify ---------------------------------------------------------------------

struct VerifyOpts {
  VerifyConfig config;
  std::int64_t trials_override = -1;
  bool json = false;
  std::string out;
};

int run_verify(const VerifyOpts& o) {
  VerifyConfig config = o.config;
  if (o.trials_override >= 0) {
    auto n = static_cast<std::uint64_t>(o.trials_override);
    config.trials_seto = n;
    config.trials_mobius = n;
    config.trials_product = n;
    config.trials_dx = n;
    config.trials_contractive = n;
    config.trials_power = n;
    config.trials_sp = n;
  }
  std::vector<PropertyCheck> checks = run_all(config);
  Json report = verify_report(config, checks);

  if (!o.json) {
    for (const PropertyCheck& c : checks) {
      std::cout << (c.passed ? "PASS" : "FAIL") << " " << c.name
                << " trials=" << c.completed << " worst_violation="
                << fmt15(c.worst_violation) << (c.vacuous ? " (vacuous)" : "") << "\n";
    }
    std::cout << (report["all_passed"].get<bool>() ? "all checks passed"
                                                   : "some checks FAILED")
              << "\n";
  }
  emit_report(report, o.json, o.out);
  return report["all_passed"].get<bool>() ? 0 : 1;
}

// -- extremal ---------------------------------------------------------------------

struct ExtremalOpts {
  std::string mode;
  std::uint64_t budget = 10000;
  Seed seed = 2026;
  int n = 1;
  std::string family = "full";
  std::string p, q;
  bool json = false;
  std::string out;
  std::string trace_path;
};

int run_extremal(const ExtremalOpts& o) {
  ExtremalResult result;
  if (o.mode == "seto-ratio") {
    MapFamily fam;
    if (o.family == "full")
      fam = MapFamily::Full;
    else if (o.family == "automorphisms")
      fam = MapFamily::AutomorphismsOnly;
    else
      throw std::invalid_argument("unknown family '" + o.family + "'");
    result = maximize_seto_ratio(o.n, o.budget, o.seed, fam);
  } else if (o.mode == "obstruction") {
    result = find_rho_obstruction(o.budget, o.seed);
  } else if (o.mode == "mobius-estimate") {
    if (o.p.empty() || o.q.empty())
      throw std::invalid_argument("mobius-estimate needs --p and --q");
    result = estimate_mobius_distance(parse_bipoint(o.p), parse_bipoint(o.q), o.budget,
                                      o.seed);
  } else {
    throw std::invalid_argument("unknown mode '" + o.mode + "'");
  }

  Json report = result.to_json();
  report["schema"] = 1;
  report["mode"] = o.mode;

  if (!o.trace_path.empty()) {
    std::ofstream f(o.trace_path);
    if (!f) throw std::invalid_argument("cannot open trace path: " + o.trace_path);
    f << "iteration,best_value\n";
    for (const auto& [it, v] : result.trace) f << it << "," << fmt15(v) << "\n";
  }

  if (!o.json) {
    if (!result.found)
      std::cout << "NOT-FOUND\n";
    else
      std::cout << "best_value = " << fmt15(result.best_value) << "\n";
    std::cout << "iterations = " << result.iterations << "\n";
    if (result.inconsistent) std::cout << "INCONSISTENT: proven upper bound exceeded\n";
  }
  emit_report(report, o.json, o.out);
  return result.inconsistent ? 1 : 0;
}

// -- replay ---------------------------------------------------------------------

struct ReplayOpts {
  std::string path;
};

int run_replay(const ReplayOpts& o) {
  std::ifstream f(o.path);
  if (!f) throw std::invalid_argument("cannot open witness file: " + o.path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }

  // Accept a bare witness, an extremal result, or a whole verify report.
  std::vector<std::pair<std::string, Json>> witnesses;
  if (doc.is_object() && doc.contains("kind")) {
    witnesses.emplace_back("witness", doc);
  } else if (doc.is_object() && doc.contains("argument") &&
             doc["argument"].contains("kind")) {
    witnesses.emplace_back("argument", doc["argument"]);
  } else if (doc.is_object() && doc.contains("checks")) {
    for (const Json& c : doc["checks"])
      if (c.contains("witness"))
        witnesses.emplace_back(c.value("name", "check"), c["witness"]);
  } else {
    throw std::invalid_argument("no replayable witness in " + o.path);
  }

  if (witnesses.empty()) {
    std::cout << "nothing to replay: no witnesses present\n";
    return 0;
  }

  int rc = 0;
  for (const auto& [label, w] : witnesses) {
    if (!w.contains("value") || !w["value"].is_number())
      throw std::invalid_argument("witness '" + label + "' lacks a numeric value");
    double stored = w["value"].get<double>();
    double recomputed = replay_value(w);
    bool ok = std::abs(recomputed - stored) <= 1e-12;
    std::cout << (ok ? "MATCH" : "MISMATCH") << " " << label
              << " stored=" << fmt15(stored) << " recomputed=" << fmt15(recomputed)
              << "\n";
    if (!ok) rc = 1;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel pseudo-distances, two-point Pick interpolation, and "
               "property verification on the disk and bidisk"};
  app.require_subcommand(1);
  int rc = 0;

  auto dist_opts = std::make_shared<DistOpts>();
  CLI::App* dist = app.add_subcommand("dist", "Evaluate a distance between two points");
  dist->add_option("metric", dist_opts->metric,
                   "pseudo-hyperbolic | dk | rho | dk-tensor2 | mobius-bidisk | caratheodory")
      ->required();
  dist->add_option("points", dist_opts->points,
                   "two points: complex 'a+bi' (or 'a,b') on the disk, coordinate "
                   "lists 'z1,z2' on the bidisk")
      ->expected(2);
  dist->add_option("--kernel", dist_opts->kernel, "szego or szego^n (dk, dk-tensor2)");
  dist->add_flag("--json", dist_opts->json, "emit a JSON report instead of a bare value");
  dist->add_option("--out", dist_opts->out, "write the JSON report to a file");
  dist->callback([dist_opts, &rc] { rc = run_dist(*dist_opts); });

  auto pick_opts = std::make_shared<PickOpts>();
  CLI::App* pick = app.add_subcommand("pick", "Decide a two-point interpolation problem");
  pick->add_option("--x1", pick_opts->x1, "disk node 1");
  pick->add_option("--x2", pick_opts->x2, "disk node 2");
  pick->add_option("--w1", pick_opts->w1, "disk target 1");
  pick->add_option("--w2", pick_opts->w2, "disk target 2");
  pick->add_option("--p", pick_opts->p, "bidisk node 1 'z1,z2'");
  pick->add_option("--q", pick_opts->q, "bidisk node 2");
  pick->add_option("--zeta", pick_opts->zeta, "bidisk target 1");
  pick->add_option("--lambda", pick_opts->lambda, "bidisk target 2");
  pick->add_option("--kernel", pick_opts->kernel, "disk kernel (szego or szego^n)");
  pick->add_flag("--construct", pick_opts->construct, "emit an explicit interpolant");
  pick->add_flag("--json", pick_opts->json, "emit a JSON report");
  pick->add_option("--out", pick_opts->out, "write the JSON report to a file");
  pick->callback([pick_opts, &rc] { rc = run_pick(*pick_opts); });

  auto verify_opts = std::make_shared<VerifyOpts>();
  CLI::App* verify = app.add_subcommand("verify", "Run the property-check suite");
  verify->add_option("--seed", verify_opts->config.master_seed, "master seed");
  verify->add_option("--tol", verify_opts->config.tolerance, "distance tolerance");
  verify->add_option("--depth", verify_opts->config.map_depth, "random map depth (0-4)");
  verify->add_option("--powers", verify_opts->config.seto_powers,
                     "kernel powers for the main check");
  verify->add_option("--trials", verify_opts->trials_override,
                     "override every per-check trial count");
  verify->add_flag("--json", verify_opts->json, "print the JSON report to stdout");
  verify->add_option("--out", verify_opts->out, "write the JSON report to a file");
  verify->callback([verify_opts, &rc] { rc = run_verify(*verify_opts); });

  auto ex_opts = std::make_shared<ExtremalOpts>();
  CLI::App* extremal = app.add_subcommand("extremal", "Run an extremal search");
  extremal->add_option("--mode", ex_opts->mode, "seto-ratio | obstruction | mobius-estimate")
      ->required();
  extremal->add_option("--budget", ex_opts->budget, "objective evaluation budget");
  extremal->add_option("--seed", ex_opts->seed, "search seed");
  extremal->add_option("--n", ex_opts->n, "kernel power for seto-ratio");
  extremal->add_option("--family", ex_opts->family, "seto-ratio maps: full | automorphisms");
  extremal->add_option("--p", ex_opts->p, "bidisk point for mobius-estimate");
  extremal->add_option("--q", ex_opts->q, "bidisk point for mobius-estimate");
  extremal->add_flag("--json", ex_opts->json, "print the result JSON to stdout");
  extremal->add_option("--out", ex_opts->out, "write the result JSON to a file");
  extremal->add_option("--trace", ex_opts->trace_path,
                       "write the iteration,best_value CSV trace to a file");
  extremal->callback([ex_opts, &rc] { rc = run_extremal(*ex_opts); });

  auto replay_opts = std::make_shared<ReplayOpts>();
  CLI::App* replay = app.add_subcommand("replay", "Re-evaluate witnesses from a report");
  replay->add_option("file", replay_opts->path, "witness, result, or report JSON file")
      ->required();
  replay->callback([replay_opts, &rc] { rc = run_replay(*replay_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
