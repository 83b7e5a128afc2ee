#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bidisk/kernels.hpp"
#include "bidisk/sampling.hpp"

using namespace bidisk;

TEST_CASE("szego value against an independently computed point") {
  DiskPoint z(Complex(0.3, 0.4));
  DiskPoint w(Complex(0.2, -0.1));
  Complex v = szego_eval(z, w);
  // 1/(1 - conj(w) z) at the pair above, 21 digits.
  CHECK(std::abs(v.real() - 1.00771208226221079692) <= 1e-16);
  CHECK(std::abs(v.imag() - 0.113110539845758354756) <= 1e-16);
}

TEST_CASE("szego powers multiply") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    DiskPoint x = rng.disk_point(0.95);
    DiskPoint y = rng.disk_point(0.95);
    Complex s = szego_eval(x, y);
    for (int n = 1; n <= 4; ++n) {
      Complex direct = kernel_eval(KernelSpec::szego_power(n), x, y);
      Complex powed = std::pow(s, n);
      CHECK(std::abs(direct - powed) <= 1e-12 * std::abs(powed));
    }
  }
}

TEST_CASE("tensor square factors over coordinates") {
  Rng rng(12);
  KernelSpec base = KernelSpec::szego_power(2);
  KernelSpec k = KernelSpec::tensor_square(base);
  for (int i = 0; i < 200; ++i) {
    BiPoint p = rng.bipoint(0.95);
    BiPoint q = rng.bipoint(0.95);
    Complex whole = kernel_eval(k, p, q);
    Complex split = kernel_eval(base, p.first, q.first) *
                    kernel_eval(base, p.second, q.second);
    CHECK(std::abs(whole - split) <= 1e-12 * std::abs(split));
  }
}

TEST_CASE("kernel construction and naming") {
  KernelSpec s1 = KernelSpec::szego_power(1);
  KernelSpec s3 = KernelSpec::szego_power(3);
  KernelSpec t3 = KernelSpec::tensor_square(s3);
  CHECK(s1.name() == "szego^1");
  CHECK(s3.name() == "szego^3");
  CHECK(t3.name() == "tensor2(szego^3)");
  CHECK(s1.on_disk());
  CHECK(t3.on_bidisk());
  CHECK(t3.base() == s3);
  CHECK(s3 == KernelSpec::szego_power(3));
  CHECK_FALSE(s1 == s3);
  CHECK_THROWS_AS(KernelSpec::szego_power(0), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec::tensor_square(t3), std::invalid_argument);
  CHECK_THROWS_AS(s1.base(), std::invalid_argument);
}

TEST_CASE("kernel_eval rejects mismatched domains") {
  KernelSpec s = KernelSpec::szego_power(1);
  KernelSpec t = KernelSpec::tensor_square(s);
  DiskPoint z(Complex(0.1, 0.0));
  BiPoint p(Complex(0.1, 0.0), Complex(0.2, 0.0));
  CHECK_THROWS_AS(kernel_eval(t, z, z), std::invalid_argument);
  CHECK_THROWS_AS(kernel_eval(s, p, p), std::invalid_argument);
}

TEST_CASE("gram matrices of distinct points are strictly positive") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    DiskPoint x = rng.disk_point(0.98);
    DiskPoint y = rng.disk_point(0.98);
    if (x == y) continue;
    for (int n : {1, 2, 5}) {
      Hermitian2 g = gram2(KernelSpec::szego_power(n), x, y);
      CHECK(g.a11 > 0.0);
      CHECK(g.a22 > 0.0);
      CHECK(g.det() > 0.0);  // Cauchy-Schwarz is strict for n >= 1
      CHECK(strict_positivity_check(g, 0.0));
    }
    Hermitian2 gt = gram2(KernelSpec::tensor_square(KernelSpec::szego_power(2)),
                          BiPoint(x, y), BiPoint(y, x));
    CHECK(gt.det() >= 0.0);
  }
}

TEST_CASE("gram diagonal is real and at least one") {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    DiskPoint x = rng.disk_point(0.99);
    Complex kxx = kernel_eval(KernelSpec::szego_power(2), x, x);
    CHECK(std::abs(kxx.imag()) <= 1e-15 * kxx.real());
    CHECK(kxx.real() >= 1.0);  // 1/(1-|x|^2)^2 >= 1 on the disk
  }
}

TEST_CASE("hermitian determinant") {
  Hermitian2 m(2.0, Complex(1.0, 1.0), 3.0);
  CHECK(m.det() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(Hermitian2(1.0, Complex(std::nan(""), 0.0), 1.0),
                  std::invalid_argument);
}
