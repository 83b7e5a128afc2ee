#include "bidisk/holomaps.hpp"

#include <algorithm>
#include <cmath>

namespace bidisk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Complex unimodular(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

void require_in_disk(Complex a, const char* who) {
  if (!is_finite(a) || std::abs(a) >= 1.0 - eps_boundary)
    throw std::domain_error(std::string(who) + ": parameter must lie inside the disk");
}

double coeff_l1(const std::vector<Complex>& coeffs) {
  double s = 0.0;
  for (Complex c : coeffs) s += std::abs(c);
  return s;
}

Complex eval_node(const HoloMap1::Node& n, Complex z);

Complex eval_ptr(const HoloMap1::NodePtr& n, Complex z) { return eval_node(*n, z); }

Complex eval_node(const HoloMap1::Node& n, Complex z) {
  return std::visit(
      overloaded{
          [](const HoloMap1::Constant& c) { return c.c; },
          [z](const HoloMap1::MobiusAuto& m) {
            return unimodular(m.theta) * (z - m.a) / (1.0 - std::conj(m.a) * z);
          },
          [z](const HoloMap1::BlaschkeProduct& b) {
            Complex acc = unimodular(b.theta);
            for (Complex a : b.zeros) acc *= (z - a) / (1.0 - std::conj(a) * z);
            return acc;
          },
          [z](const HoloMap1::ScaledPolynomial& p) {
            Complex acc(0.0, 0.0);
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
              acc = acc * z + *it;
            return acc;
          },
          [z](const HoloMap1::Compose& c) { return eval_ptr(c.outer, eval_ptr(c.inner, z)); },
          [z](const HoloMap1::ConvexCombo& c) {
            return c.t * eval_ptr(c.f, z) + (1.0 - c.t) * eval_ptr(c.g, z);
          },
          [z](const HoloMap1::PointwiseProduct& p) {
            return eval_ptr(p.f, z) * eval_ptr(p.g, z);
          },
      },
      n.v);
}

std::size_t size_node1(const HoloMap1::Node& n) {
  return std::visit(
      overloaded{
          [](const HoloMap1::Compose& c) { return 1 + size_node1(*c.outer) + size_node1(*c.inner); },
          [](const HoloMap1::ConvexCombo& c) { return 1 + size_node1(*c.f) + size_node1(*c.g); },
          [](const HoloMap1::PointwiseProduct& p) { return 1 + size_node1(*p.f) + size_node1(*p.g); },
          [](const auto&) { return std::size_t{1}; },
      },
      n.v);
}

Complex eval_scalar_node(const ScalarMap2::Node& n, Complex z1, Complex z2) {
  return std::visit(
      overloaded{
          [&](const ScalarMap2::Project& p) { return p.j == 1 ? z1 : z2; },
          [&](const ScalarMap2::Constant& c) { return c.c; },
          [&](const ScalarMap2::Lift1& l) {
            return eval_node(*l.outer, eval_scalar_node(*l.inner, z1, z2));
          },
          [&](const ScalarMap2::SeparableProduct& s) {
            return eval_node(*s.b1, z1) * eval_node(*s.b2, z2);
          },
          [&](const ScalarMap2::ConvexCombo& c) {
            return c.t * eval_scalar_node(*c.f, z1, z2) +
                   (1.0 - c.t) * eval_scalar_node(*c.g, z1, z2);
          },
      },
      n.v);
}

std::size_t size_node2(const ScalarMap2::Node& n) {
  return std::visit(
      overloaded{
          [](const ScalarMap2::Lift1& l) { return 1 + size_node1(*l.outer) + size_node2(*l.inner); },
          [](const ScalarMap2::SeparableProduct& s) {
            return 1 + size_node1(*s.b1) + size_node1(*s.b2);
          },
          [](const ScalarMap2::ConvexCombo& c) { return 1 + size_node2(*c.f) + size_node2(*c.g); },
          [](const auto&) { return std::size_t{1}; },
      },
      n.v);
}

}  // namespace

// -- HoloMap1 factories -------------------------------------------------------

HoloMap1 HoloMap1::constant(Complex c) {
  if (!is_finite(c) || std::abs(c) > 1.0)
    throw std::domain_error("HoloMap1::constant: |c| must be <= 1");
  return HoloMap1(std::make_shared<Node>(Node{Constant{c}}));
}

HoloMap1 HoloMap1::mobius(Complex a, double theta) {
  require_in_disk(a, "HoloMap1::mobius");
  return HoloMap1(std::make_shared<Node>(Node{MobiusAuto{a, theta}}));
}

HoloMap1 HoloMap1::blaschke(std::vector<Complex> zeros, double theta) {
  for (Complex a : zeros) require_in_disk(a, "HoloMap1::blaschke");
  return HoloMap1(std::make_shared<Node>(Node{BlaschkeProduct{std::move(zeros), theta}}));
}

HoloMap1 HoloMap1::scaled_polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("HoloMap1::scaled_polynomial: empty coefficient list");
  if (coeff_l1(coeffs) > 1.0 + 1e-12)
    throw std::domain_error("HoloMap1::scaled_polynomial: coefficient l1 norm exceeds 1");
  return HoloMap1(std::make_shared<Node>(Node{ScaledPolynomial{std::move(coeffs)}}));
}

HoloMap1 HoloMap1::compose(const HoloMap1& outer, const HoloMap1& inner) {
  return HoloMap1(std::make_shared<Node>(Node{Compose{outer.node(), inner.node()}}));
}

HoloMap1 HoloMap1::convex_combo(const HoloMap1& f, const HoloMap1& g, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("HoloMap1::convex_combo: weight outside [0,1]");
  return HoloMap1(std::make_shared<Node>(Node{ConvexCombo{f.node(), g.node(), t}}));
}

HoloMap1 HoloMap1::pointwise_product(const HoloMap1& f, const HoloMap1& g) {
  return HoloMap1(std::make_shared<Node>(Node{PointwiseProduct{f.node(), g.node()}}));
}

HoloMap1 HoloMap1::from_node(NodePtr n) {
  if (!n) throw std::invalid_argument("HoloMap1::from_node: null node");
  return HoloMap1(std::move(n));
}

std::size_t HoloMap1::size() const { return size_node1(*node_); }

// -- ScalarMap2 factories -----------------------------------------------------

ScalarMap2 ScalarMap2::project(int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("ScalarMap2::project: j must be 1 or 2");
  return ScalarMap2(std::make_shared<Node>(Node{Project{j}}));
}

ScalarMap2 ScalarMap2::constant(Complex c) {
  if (!is_finite(c) || std::abs(c) > 1.0)
    throw std::domain_error("ScalarMap2::constant: |c| must be <= 1");
  return ScalarMap2(std::make_shared<Node>(Node{Constant{c}}));
}

ScalarMap2 ScalarMap2::lift1(const HoloMap1& outer, const ScalarMap2& inner) {
  return ScalarMap2(std::make_shared<Node>(Node{Lift1{outer.node(), inner.node()}}));
}

ScalarMap2 ScalarMap2::separable_product(const HoloMap1& b1, const HoloMap1& b2) {
  return ScalarMap2(std::make_shared<Node>(Node{SeparableProduct{b1.node(), b2.node()}}));
}

ScalarMap2 ScalarMap2::convex_combo(const ScalarMap2& f, const ScalarMap2& g, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("ScalarMap2::convex_combo: weight outside [0,1]");
  return ScalarMap2(std::make_shared<Node>(Node{ConvexCombo{f.node(), g.node(), t}}));
}

ScalarMap2 ScalarMap2::from_node(NodePtr n) {
  if (!n) throw std::invalid_argument("ScalarMap2::from_node: null node");
  return ScalarMap2(std::move(n));
}

std::size_t ScalarMap2::size() const { return size_node2(*node_); }

// -- HoloMap2 -----------------------------------------------------------------

HoloMap2 HoloMap2::identity() {
  return HoloMap2(ScalarMap2::project(1), ScalarMap2::project(2), false);
}

HoloMap2 HoloMap2::swap_map() {
  return HoloMap2(ScalarMap2::project(1), ScalarMap2::project(2), true);
}

HoloMap2 HoloMap2::constant(Complex c1, Complex c2) {
  return HoloMap2(ScalarMap2::constant(c1), ScalarMap2::constant(c2), false);
}

HoloMap2 HoloMap2::diagonal(int j) {
  return HoloMap2(ScalarMap2::project(j), ScalarMap2::project(j), false);
}

// -- Evaluation ----------------------------------------------------------------

Complex eval1(const HoloMap1& f, DiskPoint z) { return eval_node(f.root(), z.value()); }

Complex eval1_at(const HoloMap1& f, Complex z) {
  if (!is_finite(z) || std::abs(z) > 1.0 + 1e-12)
    throw std::domain_error("eval1_at: point outside the closed disk");
  return eval_node(f.root(), z);
}

Complex eval_scalar2(const ScalarMap2& f, const BiPoint& p) {
  return eval_scalar_node(f.root(), p.first.value(), p.second.value());
}

Complex eval_scalar2_at(const ScalarMap2& f, Complex z1, Complex z2) {
  return eval_scalar_node(f.root(), z1, z2);
}

std::pair<Complex, Complex> eval2(const HoloMap2& f, const BiPoint& p) {
  Complex z1 = p.first.value(), z2 = p.second.value();
  if (f.swapped()) std::swap(z1, z2);
  Complex v1 = eval_scalar_node(f.f1().root(), z1, z2);
  Complex v2 = eval_scalar_node(f.f2().root(), z1, z2);
  if (std::abs(v1) >= 1.0 - eps_boundary || std::abs(v2) >= 1.0 - eps_boundary)
    throw boundary_degeneracy("eval2: image within eps_boundary of the unit circle");
  return {v1, v2};
}

BiPoint eval2_point(const HoloMap2& f, const BiPoint& p) {
  auto [v1, v2] = eval2(f, p);
  return BiPoint(DiskPoint(v1), DiskPoint(v2));
}

// -- Mobius parameter algebra ---------------------------------------------------

Complex mobius_apply(const MobiusParams& m, Complex z) {
  return unimodular(m.theta) * (z - m.a) / (1.0 - std::conj(m.a) * z);
}

MobiusParams mobius_inverse(const MobiusParams& m) {
  // inverse of e^{it}(z-a)/(1-conj(a)z) is the same family at (-a e^{it}, -t)
  return MobiusParams{-m.a * unimodular(m.theta), -m.theta};
}

MobiusParams mobius_compose(const MobiusParams& outer, const MobiusParams& inner) {
  Complex a = mobius_apply(mobius_inverse(inner), outer.a);
  // Fix the rotation by probing one point away from the new zero.
  Complex z0 = std::abs(a) > 0.1 ? Complex(0.0, 0.0) : Complex(0.5, 0.0);
  Complex v = mobius_apply(outer, mobius_apply(inner, z0));
  Complex u = v * (1.0 - std::conj(a) * z0) / (z0 - a);
  return MobiusParams{a, std::atan2(u.imag(), u.real())};
}

BiPoint BidiskAutomorphism::apply(const BiPoint& p) const {
  Complex z1 = p.first.value(), z2 = p.second.value();
  if (swap) std::swap(z1, z2);
  return BiPoint(DiskPoint(mobius_apply(m1, z1)), DiskPoint(mobius_apply(m2, z2)));
}

BidiskAutomorphism BidiskAutomorphism::inverse() const {
  if (!swap) return BidiskAutomorphism{mobius_inverse(m1), mobius_inverse(m2), false};
  return BidiskAutomorphism{mobius_inverse(m2), mobius_inverse(m1), true};
}

BidiskAutomorphism BidiskAutomorphism::compose_after(const BidiskAutomorphism& other) const {
  BidiskAutomorphism out;
  out.swap = swap != other.swap;
  if (!swap) {
    out.m1 = mobius_compose(m1, other.m1);
    out.m2 = mobius_compose(m2, other.m2);
  } else {
    out.m1 = mobius_compose(m1, other.m2);
    out.m2 = mobius_compose(m2, other.m1);
  }
  return out;
}

HoloMap2 BidiskAutomorphism::to_map() const {
  ScalarMap2 f1 = ScalarMap2::lift1(HoloMap1::mobius(m1.a, m1.theta), ScalarMap2::project(1));
  ScalarMap2 f2 = ScalarMap2::lift1(HoloMap1::mobius(m2.a, m2.theta), ScalarMap2::project(2));
  return HoloMap2(std::move(f1), std::move(f2), swap);
}

HoloMap2 bidisk_automorphism(DiskPoint a1, DiskPoint a2, double theta1, double theta2,
                             bool swap) {
  return BidiskAutomorphism{MobiusParams{a1.value(), theta1},
                            MobiusParams{a2.value(), theta2}, swap}
      .to_map();
}

// -- Random generation -----------------------------------------------------------

namespace {

constexpr double kParamCap = 0.9;  // radius cap for generated map parameters

std::vector<Complex> random_zeros(Rng& rng, std::size_t count) {
  std::vector<Complex> zeros;
  zeros.reserve(count);
  for (std::size_t i = 0; i < count; ++i) zeros.push_back(rng.complex_in_disk(kParamCap));
  return zeros;
}

std::vector<Complex> random_poly_coeffs(Rng& rng) {
  std::size_t deg = 1 + rng.index(4);
  std::vector<Complex> coeffs;
  coeffs.reserve(deg + 1);
  double l1 = 0.0;
  for (std::size_t i = 0; i <= deg; ++i) {
    Complex c = rng.complex_in_disk(1.0);
    coeffs.push_back(c);
    l1 += std::abs(c);
  }
  // Normalize so the l1 norm is a random level in (0, 1].
  double level = rng.uniform(0.3, 1.0);
  if (l1 > 0.0)
    for (Complex& c : coeffs) c *= level / l1;
  return coeffs;
}

}  // namespace

HoloMap1 random_holomap1(Rng& rng, int depth) {
  if (depth <= 0) {
    switch (rng.index(5)) {
      case 0: return HoloMap1::identity();
      case 1:
      case 2: return HoloMap1::mobius(rng.complex_in_disk(kParamCap), rng.angle());
      case 3: return HoloMap1::constant(rng.complex_in_disk(0.95));
      default: return HoloMap1::blaschke(random_zeros(rng, 1 + rng.index(2)), rng.angle());
    }
  }
  switch (rng.index(7)) {
    case 0: return HoloMap1::mobius(rng.complex_in_disk(kParamCap), rng.angle());
    case 1: return HoloMap1::blaschke(random_zeros(rng, 1 + rng.index(3)), rng.angle());
    case 2: return HoloMap1::scaled_polynomial(random_poly_coeffs(rng));
    case 3: {
      HoloMap1 outer = random_holomap1(rng, depth - 1);
      HoloMap1 inner = random_holomap1(rng, depth - 1);
      return HoloMap1::compose(outer, inner);
    }
    case 4: {
      HoloMap1 f = random_holomap1(rng, depth - 1);
      HoloMap1 g = random_holomap1(rng, depth - 1);
      return HoloMap1::convex_combo(f, g, rng.uniform01());
    }
    case 5: {
      HoloMap1 f = random_holomap1(rng, depth - 1);
      HoloMap1 g = random_holomap1(rng, depth - 1);
      return HoloMap1::pointwise_product(f, g);
    }
    default: return HoloMap1::constant(rng.complex_in_disk(0.95));
  }
}

ScalarMap2 random_scalar_map2(Rng& rng, int depth) {
  if (depth <= 0) {
    switch (rng.index(3)) {
      case 0: return ScalarMap2::project(1);
      case 1: return ScalarMap2::project(2);
      default: return ScalarMap2::constant(rng.complex_in_disk(0.95));
    }
  }
  switch (rng.index(6)) {
    case 0:
    case 1: return ScalarMap2::project(rng.coin() ? 1 : 2);
    case 2: {
      HoloMap1 outer = random_holomap1(rng, depth - 1);
      ScalarMap2 inner = random_scalar_map2(rng, depth - 1);
      return ScalarMap2::lift1(outer, inner);
    }
    case 3: {
      HoloMap1 b1 = random_holomap1(rng, depth - 1);
      HoloMap1 b2 = random_holomap1(rng, depth - 1);
      return ScalarMap2::separable_product(b1, b2);
    }
    case 4: {
      ScalarMap2 f = random_scalar_map2(rng, depth - 1);
      ScalarMap2 g = random_scalar_map2(rng, depth - 1);
      return ScalarMap2::convex_combo(f, g, rng.uniform01());
    }
    default: return ScalarMap2::constant(rng.complex_in_disk(0.95));
  }
}

HoloMap2 random_selfmap_bidisk(Rng& rng, int depth) {
  if (depth < 0 || depth > 4)
    throw std::invalid_argument("random_selfmap_bidisk: depth must be in [0,4]");
  if (depth == 0) {
    switch (rng.index(3)) {
      case 0: return HoloMap2::identity();
      case 1: return HoloMap2::swap_map();
      default:
        return HoloMap2::constant(rng.complex_in_disk(0.95), rng.complex_in_disk(0.95));
    }
  }
  switch (rng.index(6)) {
    case 0: return random_bidisk_automorphism(rng).to_map();
    case 1: {
      // diagonal family: both components read the same coordinate
      int j = rng.coin() ? 1 : 2;
      if (rng.coin()) return HoloMap2::diagonal(j);
      ScalarMap2 pj = ScalarMap2::project(j);
      ScalarMap2 f1 = ScalarMap2::lift1(random_holomap1(rng, depth - 1), pj);
      ScalarMap2 f2 = ScalarMap2::lift1(random_holomap1(rng, depth - 1), pj);
      return HoloMap2(std::move(f1), std::move(f2), false);
    }
    case 2: {
      // separable Blaschke components
      ScalarMap2 f1 = ScalarMap2::separable_product(
          HoloMap1::blaschke(random_zeros(rng, 1 + rng.index(2)), rng.angle()),
          HoloMap1::blaschke(random_zeros(rng, 1 + rng.index(2)), rng.angle()));
      ScalarMap2 f2 = ScalarMap2::separable_product(
          HoloMap1::blaschke(random_zeros(rng, 1 + rng.index(2)), rng.angle()),
          HoloMap1::blaschke(random_zeros(rng, 1 + rng.index(2)), rng.angle()));
      return HoloMap2(std::move(f1), std::move(f2), rng.coin());
    }
    case 3:
    case 4: {
      ScalarMap2 f1 = random_scalar_map2(rng, depth);
      ScalarMap2 f2 = random_scalar_map2(rng, depth);
      return HoloMap2(std::move(f1), std::move(f2), rng.coin());
    }
    default:
      return HoloMap2::constant(rng.complex_in_disk(0.95), rng.complex_in_disk(0.95));
  }
}

HoloMap2 random_selfmap_bidisk(Seed seed, int depth) {
  Rng rng(seed);
  return random_selfmap_bidisk(rng, depth);
}

BidiskAutomorphism random_bidisk_automorphism(Rng& rng, double cap) {
  BidiskAutomorphism a;
  a.m1 = MobiusParams{rng.complex_in_disk(cap), rng.angle()};
  a.m2 = MobiusParams{rng.complex_in_disk(cap), rng.angle()};
  a.swap = rng.coin();
  return a;
}

// -- Continuous-parameter access ---------------------------------------------------

namespace {

struct ParamCollector {
  std::vector<double>* out;

  void complex_param(Complex c) {
    out->push_back(c.real());
    out->push_back(c.imag());
  }
  void real_param(double x) { out->push_back(x); }

  void walk(const HoloMap1::Node& n) {
    std::visit(overloaded{
                   [&](const HoloMap1::Constant& c) { complex_param(c.c); },
                   [&](const HoloMap1::MobiusAuto& m) {
                     complex_param(m.a);
                     real_param(m.theta);
                   },
                   [&](const HoloMap1::BlaschkeProduct& b) {
                     for (Complex z : b.zeros) complex_param(z);
                     real_param(b.theta);
                   },
                   [&](const HoloMap1::ScaledPolynomial& p) {
                     for (Complex c : p.coeffs) complex_param(c);
                   },
                   [&](const HoloMap1::Compose& c) {
                     walk(*c.outer);
                     walk(*c.inner);
                   },
                   [&](const HoloMap1::ConvexCombo& c) {
                     real_param(c.t);
                     walk(*c.f);
                     walk(*c.g);
                   },
                   [&](const HoloMap1::PointwiseProduct& p) {
                     walk(*p.f);
                     walk(*p.g);
                   },
               },
               n.v);
  }

  void walk(const ScalarMap2::Node& n) {
    std::visit(overloaded{
                   [&](const ScalarMap2::Project&) {},
                   [&](const ScalarMap2::Constant& c) { complex_param(c.c); },
                   [&](const ScalarMap2::Lift1& l) {
                     walk(*l.outer);
                     walk(*l.inner);
                   },
                   [&](const ScalarMap2::SeparableProduct& s) {
                     walk(*s.b1);
                     walk(*s.b2);
                   },
                   [&](const ScalarMap2::ConvexCombo& c) {
                     real_param(c.t);
                     walk(*c.f);
                     walk(*c.g);
                   },
               },
               n.v);
  }
};

struct ParamRebuilder {
  const std::vector<double>* params;
  std::size_t cursor = 0;

  double take() {
    if (cursor >= params->size())
      throw std::invalid_argument("with_map_parameters: parameter vector too short");
    return (*params)[cursor++];
  }

  Complex take_in_disk(double cap) {
    double re = take(), im = take();
    Complex c(re, im);
    double r = std::abs(c);
    if (r > cap) c *= cap / r;
    return c;
  }

  double take_unit_interval() { return std::clamp(take(), 0.0, 1.0); }

  HoloMap1 rebuild(const HoloMap1::Node& n) {
    return std::visit(
        overloaded{
            [&](const HoloMap1::Constant&) { return HoloMap1::constant(take_in_disk(0.999)); },
            [&](const HoloMap1::MobiusAuto&) {
              Complex a = take_in_disk(0.995);
              return HoloMap1::mobius(a, take());
            },
            [&](const HoloMap1::BlaschkeProduct& b) {
              std::vector<Complex> zeros;
              zeros.reserve(b.zeros.size());
              for (std::size_t i = 0; i < b.zeros.size(); ++i)
                zeros.push_back(take_in_disk(0.995));
              return HoloMap1::blaschke(std::move(zeros), take());
            },
            [&](const HoloMap1::ScaledPolynomial& p) {
              std::vector<Complex> coeffs;
              coeffs.reserve(p.coeffs.size());
              double l1 = 0.0;
              for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                double re = take(), im = take();  // sequenced, unlike call args
                Complex c(re, im);
                coeffs.push_back(c);
                l1 += std::abs(c);
              }
              if (l1 > 1.0)
                for (Complex& c : coeffs) c *= (1.0 - 1e-12) / l1;
              return HoloMap1::scaled_polynomial(std::move(coeffs));
            },
            [&](const HoloMap1::Compose& c) {
              HoloMap1 outer = rebuild(*c.outer);
              HoloMap1 inner = rebuild(*c.inner);
              return HoloMap1::compose(outer, inner);
            },
            [&](const HoloMap1::ConvexCombo& c) {
              double t = take_unit_interval();
              HoloMap1 f = rebuild(*c.f);
              HoloMap1 g = rebuild(*c.g);
              return HoloMap1::convex_combo(f, g, t);
            },
            [&](const HoloMap1::PointwiseProduct& p) {
              HoloMap1 f = rebuild(*p.f);
              HoloMap1 g = rebuild(*p.g);
              return HoloMap1::pointwise_product(f, g);
            },
        },
        n.v);
  }

  ScalarMap2 rebuild2(const ScalarMap2::Node& n) {
    return std::visit(
        overloaded{
            [&](const ScalarMap2::Project& p) { return ScalarMap2::project(p.j); },
            [&](const ScalarMap2::Constant&) { return ScalarMap2::constant(take_in_disk(0.999)); },
            [&](const ScalarMap2::Lift1& l) {
              HoloMap1 outer = rebuild(*l.outer);
              ScalarMap2 inner = rebuild2(*l.inner);
              return ScalarMap2::lift1(outer, inner);
            },
            [&](const ScalarMap2::SeparableProduct& s) {
              HoloMap1 b1 = rebuild(*s.b1);
              HoloMap1 b2 = rebuild(*s.b2);
              return ScalarMap2::separable_product(b1, b2);
            },
            [&](const ScalarMap2::ConvexCombo& c) {
              double t = take_unit_interval();
              ScalarMap2 f = rebuild2(*c.f);
              ScalarMap2 g = rebuild2(*c.g);
              return ScalarMap2::convex_combo(f, g, t);
            },
        },
        n.v);
  }
};

}  // namespace

std::vector<double> map_parameters(const HoloMap1& f) {
  std::vector<double> out;
  ParamCollector{&out}.walk(f.root());
  return out;
}

std::vector<double> map_parameters(const ScalarMap2& f) {
  std::vector<double> out;
  ParamCollector{&out}.walk(f.root());
  return out;
}

std::vector<double> map_parameters(const HoloMap2& f) {
  std::vector<double> out;
  ParamCollector col{&out};
  col.walk(f.f1().root());
  col.walk(f.f2().root());
  return out;
}

HoloMap1 with_map_parameters(const HoloMap1& f, const std::vector<double>& params) {
  ParamRebuilder rb{&params};
  HoloMap1 out = rb.rebuild(f.root());
  if (rb.cursor != params.size())
    throw std::invalid_argument("with_map_parameters: parameter vector too long");
  return out;
}

ScalarMap2 with_map_parameters(const ScalarMap2& f, const std::vector<double>& params) {
  ParamRebuilder rb{&params};
  ScalarMap2 out = rb.rebuild2(f.root());
  if (rb.cursor != params.size())
    throw std::invalid_argument("with_map_parameters: parameter vector too long");
  return out;
}

HoloMap2 with_map_parameters(const HoloMap2& f, const std::vector<double>& params) {
  ParamRebuilder rb{&params};
  ScalarMap2 f1 = rb.rebuild2(f.f1().root());
  ScalarMap2 f2 = rb.rebuild2(f.f2().root());
  if (rb.cursor != params.size())
    throw std::invalid_argument("with_map_parameters: parameter vector too long");
  return HoloMap2(std::move(f1), std::move(f2), f.swapped());
}

}  // namespace bidisk
