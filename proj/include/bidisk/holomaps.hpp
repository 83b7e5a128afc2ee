#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "bidisk/core.hpp"
#include "bidisk/sampling.hpp"

// Expression trees for holomorphic self-maps of the disk and bidisk. Every
// constructor preserves the sup-norm bound <= 1, so closure under the bound
// is structural; evaluation only spot-checks it. Trees are immutable and
// shareable, and serialize to JSON so any property failure can ship the
// offending map as a witness.

namespace bidisk {

/// Holomorphic map D -> closed(D), sup-norm <= 1 by construction.
class HoloMap1 {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Constant {
    Complex c;  // |c| <= 1
  };
  struct MobiusAuto {
    Complex a;     // in D
    double theta;  // e^{i theta} (z - a) / (1 - conj(a) z)
  };
  struct BlaschkeProduct {
    std::vector<Complex> zeros;  // each in D
    double theta;                // unimodular front factor e^{i theta}
  };
  struct ScaledPolynomial {
    std::vector<Complex> coeffs;  // sum |c_i| <= 1, c_0 first
  };
  struct Compose {
    NodePtr outer, inner;  // z -> outer(inner(z))
  };
  struct ConvexCombo {
    NodePtr f, g;
    double t;  // t f + (1-t) g, t in [0,1]
  };
  struct PointwiseProduct {
    NodePtr f, g;
  };

  struct Node {
    std::variant<Constant, MobiusAuto, BlaschkeProduct, ScaledPolynomial, Compose,
                 ConvexCombo, PointwiseProduct>
        v;
  };

  static HoloMap1 constant(Complex c);
  static HoloMap1 mobius(Complex a, double theta);
  static HoloMap1 identity() { return mobius(Complex(0, 0), 0.0); }
  static HoloMap1 blaschke(std::vector<Complex> zeros, double theta);
  static HoloMap1 scaled_polynomial(std::vector<Complex> coeffs);
  static HoloMap1 compose(const HoloMap1& outer, const HoloMap1& inner);
  static HoloMap1 convex_combo(const HoloMap1& f, const HoloMap1& g, double t);
  static HoloMap1 pointwise_product(const HoloMap1& f, const HoloMap1& g);
  static HoloMap1 from_node(NodePtr n);

  const Node& root() const { return *node_; }
  NodePtr node() const { return node_; }
  std::size_t size() const;

 private:
  explicit HoloMap1(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

/// Scalar holomorphic map D^2 -> closed(D): one component of a bidisk
/// self-map.
class ScalarMap2 {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Project {
    int j;  // 1 or 2
  };
  struct Constant {
    Complex c;
  };
  struct Lift1 {
    HoloMap1::NodePtr outer;  // disk map applied after...
    NodePtr inner;            // ...a scalar map of the bidisk
  };
  struct SeparableProduct {
    HoloMap1::NodePtr b1, b2;  // b1(z1) * b2(z2)
  };
  struct ConvexCombo {
    NodePtr f, g;
    double t;
  };

  struct Node {
    std::variant<Project, Constant, Lift1, SeparableProduct, ConvexCombo> v;
  };

  static ScalarMap2 project(int j);
  static ScalarMap2 constant(Complex c);
  static ScalarMap2 lift1(const HoloMap1& outer, const ScalarMap2& inner);
  static ScalarMap2 separable_product(const HoloMap1& b1, const HoloMap1& b2);
  static ScalarMap2 convex_combo(const ScalarMap2& f, const ScalarMap2& g, double t);
  static ScalarMap2 from_node(NodePtr n);

  const Node& root() const { return *node_; }
  NodePtr node() const { return node_; }
  std::size_t size() const;

 private:
  explicit ScalarMap2(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

/// Holomorphic self-map of the bidisk: two scalar components plus an
/// optional coordinate swap applied to the input.
class HoloMap2 {
 public:
  HoloMap2(ScalarMap2 f1, ScalarMap2 f2, bool swap_input)
      : f1_(std::move(f1)), f2_(std::move(f2)), swap_(swap_input) {}

  static HoloMap2 identity();
  static HoloMap2 swap_map();
  static HoloMap2 constant(Complex c1, Complex c2);
  static HoloMap2 diagonal(int j);  // (pi_j, pi_j)

  const ScalarMap2& f1() const { return f1_; }
  const ScalarMap2& f2() const { return f2_; }
  bool swapped() const { return swap_; }
  std::size_t size() const { return 1 + f1_.size() + f2_.size(); }

 private:
  ScalarMap2 f1_, f2_;
  bool swap_;
};

/// Evaluate a disk map at an interior point.
Complex eval1(const HoloMap1& f, DiskPoint z);

/// Evaluate at any point of the closed disk (used by sup-norm grid checks).
Complex eval1_at(const HoloMap1& f, Complex z);

Complex eval_scalar2(const ScalarMap2& f, const BiPoint& p);
Complex eval_scalar2_at(const ScalarMap2& f, Complex z1, Complex z2);

/// Componentwise evaluation. Throws boundary_degeneracy when a component
/// lands within eps_boundary of the unit circle; callers resample.
std::pair<Complex, Complex> eval2(const HoloMap2& f, const BiPoint& p);

/// eval2 wrapped back into a BiPoint.
BiPoint eval2_point(const HoloMap2& f, const BiPoint& p);

// -- Mobius parameter algebra (closed under inverse and composition) --------

struct MobiusParams {
  Complex a;
  double theta;
};

Complex mobius_apply(const MobiusParams& m, Complex z);
MobiusParams mobius_inverse(const MobiusParams& m);
MobiusParams mobius_compose(const MobiusParams& outer, const MobiusParams& inner);

/// Automorphism of the bidisk: coordinate Mobius pair plus optional swap,
/// kept in parameter form so inverses and composites stay exact.
struct BidiskAutomorphism {
  MobiusParams m1{Complex(0, 0), 0.0};
  MobiusParams m2{Complex(0, 0), 0.0};
  bool swap = false;

  BiPoint apply(const BiPoint& p) const;
  BidiskAutomorphism inverse() const;
  /// this after other: (*this)(other(z)).
  BidiskAutomorphism compose_after(const BidiskAutomorphism& other) const;
  HoloMap2 to_map() const;
};

/// Automorphism assembled directly from its parameters, as an expression tree.
HoloMap2 bidisk_automorphism(DiskPoint a1, DiskPoint a2, double theta1, double theta2,
                             bool swap);

// -- Seeded random generation ------------------------------------------------

/// Random disk map of bounded depth; the family covers constants, Mobius
/// automorphisms, Blaschke products, scaled polynomials, and combinations.
HoloMap1 random_holomap1(Rng& rng, int depth);

/// Random scalar map of the bidisk, projections included.
ScalarMap2 random_scalar_map2(Rng& rng, int depth);

/// Random bidisk self-map. Pure function of (seed, depth); depth 0 yields
/// identity, swap, or a constant. Tree size is bounded by 2^depth * 8.
HoloMap2 random_selfmap_bidisk(Seed seed, int depth);
HoloMap2 random_selfmap_bidisk(Rng& rng, int depth);

BidiskAutomorphism random_bidisk_automorphism(Rng& rng, double cap = 0.9);

// -- Continuous-parameter access (used by extremal refinement) ---------------

std::vector<double> map_parameters(const HoloMap2& f);
HoloMap2 with_map_parameters(const HoloMap2& f, const std::vector<double>& params);
std::vector<double> map_parameters(const HoloMap1& f);
HoloMap1 with_map_parameters(const HoloMap1& f, const std::vector<double>& params);
std::vector<double> map_parameters(const ScalarMap2& f);
ScalarMap2 with_map_parameters(const ScalarMap2& f, const std::vector<double>& params);

}  // namespace bidisk
