#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bidisk/holomaps.hpp"
#include "bidisk/metrics.hpp"
#include "bidisk/serialize.hpp"

using namespace bidisk;

namespace {

DiskPoint dp(double re, double im) { return DiskPoint(Complex(re, im)); }

Complex unimod(double theta) { return std::polar(1.0, theta); }

}  // namespace

TEST_CASE("mobius automorphism basics") {
  Complex a(0.3, -0.2);
  double theta = 0.7;
  HoloMap1 f = HoloMap1::mobius(a, theta);
  // phi(a) = 0 and phi(0) = -e^{i theta} a
  CHECK(std::abs(eval1(f, DiskPoint(a))) <= 1e-15);
  CHECK(std::abs(eval1(f, dp(0, 0)) - (-unimod(theta) * a)) <= 1e-15);
  // identity fixes points
  CHECK(std::abs(eval1(HoloMap1::identity(), dp(0.4, 0.1)) - Complex(0.4, 0.1)) <=
        1e-16);
}

TEST_CASE("constant and polynomial evaluation") {
  CHECK(std::abs(eval1(HoloMap1::constant(Complex(0.2, 0.5)), dp(0.9, 0)) -
                 Complex(0.2, 0.5)) == 0.0);
  // 0.1 + 0.2 z + 0.3 z^2 at z = 0.5: 0.1 + 0.1 + 0.075
  HoloMap1 p = HoloMap1::scaled_polynomial({Complex(0.1, 0), Complex(0.2, 0),
                                            Complex(0.3, 0)});
  CHECK(std::abs(eval1(p, dp(0.5, 0)) - Complex(0.275, 0)) <= 1e-15);
  CHECK_THROWS_AS(HoloMap1::scaled_polynomial({}), std::invalid_argument);
  CHECK_THROWS_AS(
      HoloMap1::scaled_polynomial({Complex(0.8, 0), Complex(0.4, 0)}),
      std::domain_error);  // l1 mass 1.2 > 1
}

TEST_CASE("blaschke products vanish at their zeros") {
  std::vector<Complex> zeros{Complex(0.5, 0.0), Complex(-0.3, 0.2)};
  HoloMap1 b = HoloMap1::blaschke(zeros, 0.4);
  for (const Complex& z : zeros) CHECK(std::abs(eval1(b, DiskPoint(z))) <= 1e-15);
  // two-factor product at 0: (0-a1)(0-a2)/(1*1) rotated
  Complex expected = unimod(0.4) * (-zeros[0]) * (-zeros[1]);
  CHECK(std::abs(eval1(b, dp(0, 0)) - expected) <= 1e-15);
  CHECK_THROWS_AS(HoloMap1::blaschke({Complex(1.1, 0)}, 0.0), std::domain_error);
}

TEST_CASE("composition, convex combination, product") {
  HoloMap1 f = HoloMap1::mobius(Complex(0.2, 0.1), 0.3);
  HoloMap1 g = HoloMap1::scaled_polynomial({Complex(0, 0), Complex(0.9, 0)});
  DiskPoint z = dp(0.35, -0.4);
  Complex fz = eval1(f, z);
  Complex gz = eval1(g, z);
  CHECK(std::abs(eval1(HoloMap1::compose(f, g), z) - eval1(f, DiskPoint(gz))) <=
        1e-15);
  CHECK(std::abs(eval1(HoloMap1::convex_combo(f, g, 0.25), z) -
                 (0.25 * fz + 0.75 * gz)) <= 1e-15);
  CHECK(std::abs(eval1(HoloMap1::pointwise_product(f, g), z) - fz * gz) <= 1e-15);
  CHECK_THROWS_AS(HoloMap1::convex_combo(f, g, 1.5), std::domain_error);
}

TEST_CASE("scalar maps on the bidisk") {
  BiPoint p(Complex(0.3, 0.1), Complex(-0.2, 0.4));
  CHECK(eval_scalar2(ScalarMap2::project(1), p) == p.first.value());
  CHECK(eval_scalar2(ScalarMap2::project(2), p) == p.second.value());
  CHECK_THROWS_AS(ScalarMap2::project(3), std::invalid_argument);

  HoloMap1 f = HoloMap1::mobius(Complex(0.1, 0.2), 1.1);
  ScalarMap2 lifted = ScalarMap2::lift1(f, ScalarMap2::project(2));
  CHECK(std::abs(eval_scalar2(lifted, p) - eval1(f, p.second)) <= 1e-15);

  HoloMap1 b1 = HoloMap1::mobius(Complex(0.3, 0), 0.0);
  HoloMap1 b2 = HoloMap1::mobius(Complex(0, -0.4), 0.2);
  ScalarMap2 sep = ScalarMap2::separable_product(b1, b2);
  CHECK(std::abs(eval_scalar2(sep, p) - eval1(b1, p.first) * eval1(b2, p.second)) <=
        1e-15);

  ScalarMap2 mix = ScalarMap2::convex_combo(ScalarMap2::project(1),
                                            ScalarMap2::constant(Complex(0.5, 0)),
                                            0.5);
  CHECK(std::abs(eval_scalar2(mix, p) - (0.5 * p.first.value() + Complex(0.25, 0))) <=
        1e-15);
}

TEST_CASE("bidisk map evaluation and input swap") {
  BiPoint p(Complex(0.3, 0.1), Complex(-0.2, 0.4));
  auto [i1, i2] = eval2(HoloMap2::identity(), p);
  CHECK(i1 == p.first.value());
  CHECK(i2 == p.second.value());
  auto [s1, s2] = eval2(HoloMap2::swap_map(), p);
  CHECK(s1 == p.second.value());
  CHECK(s2 == p.first.value());
  auto [d1, d2] = eval2(HoloMap2::diagonal(1), p);
  CHECK(d1 == p.first.value());
  CHECK(d2 == p.first.value());
  // constants at the closed-disk boundary degenerate under eval2
  HoloMap2 edge = HoloMap2::constant(Complex(1.0 - 1e-10, 0.0), Complex(0, 0));
  CHECK_THROWS_AS(eval2(edge, p), boundary_degeneracy);
}

TEST_CASE("random disk maps are contractive on a closed-disk grid") {
  Rng rng(31);
  int maps = 1000;
  for (int m = 0; m < maps; ++m) {
    HoloMap1 f = random_holomap1(rng, 3);
    for (int i = 0; i < 40; ++i) {
      double r = 0.9999 * double(i + 1) / 40.0;
      for (int j = 0; j < 40; ++j) {
        Complex z = std::polar(r, 2.0 * std::numbers::pi * double(j) / 40.0);
        CHECK(std::abs(eval1_at(f, z)) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("random bidisk maps respect the size bound") {
  for (int depth = 0; depth <= 4; ++depth) {
    for (Seed seed = 0; seed < 300; ++seed) {
      HoloMap2 F = random_selfmap_bidisk(seed * 977 + depth, depth);
      CHECK(F.size() <= (std::size_t(1) << depth) * 8);
    }
  }
  CHECK_THROWS_AS(random_selfmap_bidisk(Seed(1), 5), std::invalid_argument);
  CHECK_THROWS_AS(random_selfmap_bidisk(Seed(1), -1), std::invalid_argument);
}

TEST_CASE("random bidisk maps are deterministic in the seed") {
  for (Seed seed : {Seed(1), Seed(42), Seed(9999)}) {
    Json a = to_json(random_selfmap_bidisk(seed, 3));
    Json b = to_json(random_selfmap_bidisk(seed, 3));
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("mobius parameter algebra matches pointwise evaluation") {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    MobiusParams m{rng.complex_in_disk(0.9), rng.angle()};
    MobiusParams inv = mobius_inverse(m);
    Complex z = rng.complex_in_disk(0.95);
    CHECK(std::abs(mobius_apply(inv, mobius_apply(m, z)) - z) <= 1e-12);

    MobiusParams n{rng.complex_in_disk(0.9), rng.angle()};
    MobiusParams comp = mobius_compose(m, n);
    CHECK(std::abs(mobius_apply(comp, z) - mobius_apply(m, mobius_apply(n, z))) <=
          1e-12);
    CHECK(std::abs(comp.a) < 1.0);
  }
}

TEST_CASE("bidisk automorphism group operations") {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    BidiskAutomorphism A = random_bidisk_automorphism(rng);
    BidiskAutomorphism B = random_bidisk_automorphism(rng);
    BiPoint p = rng.bipoint(0.95);

    BiPoint ap = A.apply(p);
    // the expression-tree form evaluates identically
    auto [t1, t2] = eval2(A.to_map(), p);
    CHECK(std::abs(t1 - ap.first.value()) <= 1e-12);
    CHECK(std::abs(t2 - ap.second.value()) <= 1e-12);

    BiPoint back = A.inverse().apply(ap);
    CHECK(std::abs(back.first.value() - p.first.value()) <= 1e-12);
    CHECK(std::abs(back.second.value() - p.second.value()) <= 1e-12);

    BiPoint via_comp = A.compose_after(B).apply(p);
    BiPoint direct = A.apply(B.apply(p));
    CHECK(std::abs(via_comp.first.value() - direct.first.value()) <= 1e-12);
    CHECK(std::abs(via_comp.second.value() - direct.second.value()) <= 1e-12);
  }
}

TEST_CASE("automorphisms are rho isometries") {
  Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    BidiskAutomorphism A = random_bidisk_automorphism(rng);
    BiPoint p = rng.bipoint(0.9);
    BiPoint q = rng.bipoint(0.9);
    CHECK(std::abs(double(rho(A.apply(p), A.apply(q))) - double(rho(p, q))) <= 1e-12);
  }
}

TEST_CASE("bidisk_automorphism constructor form") {
  HoloMap2 F = bidisk_automorphism(dp(0.2, 0.1), dp(-0.3, 0.0), 0.5, -0.4, true);
  BiPoint p(Complex(0.4, -0.2), Complex(0.1, 0.3));
  // swap applies to the input first, then the coordinate mobius maps
  auto [v1, v2] = eval2(F, p);
  Complex e1 = mobius_apply({Complex(0.2, 0.1), 0.5}, p.second.value());
  Complex e2 = mobius_apply({Complex(-0.3, 0.0), -0.4}, p.first.value());
  CHECK(std::abs(v1 - e1) <= 1e-13);
  CHECK(std::abs(v2 - e2) <= 1e-13);
}

TEST_CASE("parameter extraction and rebuild round-trips") {
  Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    HoloMap2 F = random_selfmap_bidisk(rng, 3);
    std::vector<double> params = map_parameters(F);
    HoloMap2 G = with_map_parameters(F, params);
    CHECK(to_json(F).dump() == to_json(G).dump());

    std::vector<double> truncated(params.begin(), params.end());
    truncated.push_back(0.0);
    CHECK_THROWS_AS(with_map_parameters(F, truncated), std::invalid_argument);
  }
}

TEST_CASE("rebuilt parameters project back into the domain") {
  HoloMap1 f = HoloMap1::mobius(Complex(0.5, 0.0), 0.25);
  std::vector<double> p = map_parameters(f);
  REQUIRE(p.size() == 3);  // re a, im a, theta
  p[0] = 5.0;              // way outside; must be clamped radially
  HoloMap1 g = with_map_parameters(f, p);
  CHECK(std::abs(eval1(g, dp(0, 0))) <= 1.0);
  std::vector<double> pg = map_parameters(g);
  CHECK(std::hypot(pg[0], pg[1]) <= 0.995 + 1e-12);
}

TEST_CASE("serialization round-trips preserve evaluation") {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    HoloMap2 F = random_selfmap_bidisk(rng, 3);
    Json j = to_json(F);
    HoloMap2 G = holomap2_from_json(j);
    CHECK(to_json(G).dump() == j.dump());
    BiPoint p = rng.bipoint(0.9);
    try {
      auto [a1, a2] = eval2(F, p);
      auto [b1, b2] = eval2(G, p);
      CHECK(std::abs(a1 - b1) == 0.0);
      CHECK(std::abs(a2 - b2) == 0.0);
    } catch (const boundary_degeneracy&) {
      // both or neither throw; reaching here via F only is fine because G
      // would have thrown identically above
    }
  }
  KernelSpec k = KernelSpec::tensor_square(KernelSpec::szego_power(3));
  CHECK(kernel_from_json(to_json(k)) == k);
  BiPoint p(Complex(0.1, -0.2), Complex(0.3, 0.4));
  BiPoint q = bipoint_from_json(to_json(p));
  CHECK(p.first == q.first);
  CHECK(p.second == q.second);
  CHECK_THROWS_AS(holomap1_from_json(Json{{"op", "nonsense"}}), std::invalid_argument);
}
