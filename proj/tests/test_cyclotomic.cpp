#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "moduli/cyclotomic.hpp"
#include "support/mpfr_complex.hpp"
#include "support/small_fields.hpp"

using moduli::CyclotomicField;
using moduli::Lemma7Kind;
using moduli::Rational;
using moduli::RootOfUnitySpec;
using testsupport::EisensteinRational;
using testsupport::GaussianRational;
using testsupport::MpfrComplex;

TEST_CASE("lemma 7 small cases") {
  CHECK(moduli::lemma7_sum(Lemma7Kind::simple, 2) == Rational(1, 2));
  CHECK(moduli::lemma7_sum(Lemma7Kind::double_pole, 2) == Rational(-1, 4));
  CHECK(moduli::lemma7_sum(Lemma7Kind::simple, 3) == Rational(1));
  CHECK_THROWS_AS(moduli::lemma7_sum(Lemma7Kind::simple, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(moduli::lemma7_sum(Lemma7Kind::double_pole, 0),
                  std::invalid_argument);
}

TEST_CASE("lemma 7 double pole at n = 4 against a Gaussian-rational oracle") {
  // Direct summation over j = 1..3 in Q(i): i/(1-i)^2 + (-1)/4 + (-i)/(1+i)^2.
  const GaussianRational one{1, 0};
  const GaussianRational roots[3] = {{0, 1}, {-1, 0}, {0, -1}};  // i^1..i^3
  GaussianRational acc{0, 0};
  for (const auto& xi : roots) {
    GaussianRational d = one - xi;
    acc = acc + xi * (d * d).reciprocal();
  }
  REQUIRE(acc.is_rational());
  CHECK(acc.a == Rational(-5, 4));
  CHECK(moduli::lemma7_sum(Lemma7Kind::double_pole, 4) == acc.a);
}

TEST_CASE("lemma 7 closed forms against 200-bit direct sums, n = 2..200") {
  for (long n = 2; n <= 200; ++n) {
    MpfrComplex simple, dpole;
    const MpfrComplex one = MpfrComplex::from_long(1);
    for (long j = 1; j < n; ++j) {
      const MpfrComplex xi = MpfrComplex::root_of_unity(j, n);
      const MpfrComplex u = (one - xi).reciprocal();
      simple = simple + u;
      dpole = dpole + xi * u * u;
    }
    const double s_exact =
        moduli::lemma7_sum(Lemma7Kind::simple, n).to_double();
    const double d_exact =
        moduli::lemma7_sum(Lemma7Kind::double_pole, n).to_double();
    CHECK(std::abs(simple.real() - s_exact) <= 1e-9 * std::abs(s_exact));
    CHECK(std::abs(dpole.real() - d_exact) <= 1e-9 * std::abs(d_exact));
    CHECK(std::abs(simple.imag()) < 1e-30);
    CHECK(std::abs(dpole.imag()) < 1e-30);
  }
}

TEST_CASE("cyclotomic field basics") {
  CyclotomicField f4(4);
  CHECK(f4.degree() == 2);  // Phi_4 = x^2 + 1
  auto i = f4.root(1);
  auto m1 = f4.mul(i, i);
  CHECK(f4.rational_value(m1) == Rational(-1));
  auto inv = f4.inverse(f4.sub(f4.one(), i));  // 1/(1-i) = (1+i)/2
  CHECK(inv[0] == Rational(1, 2));
  CHECK(inv[1] == Rational(1, 2));
  CHECK_THROWS_AS(f4.inverse(f4.zero()), std::invalid_argument);
  CHECK_THROWS_AS(f4.rational_value(i), std::domain_error);

  CyclotomicField f12(12);
  CHECK(f12.degree() == 4);
  // zeta_12^2 = zeta_6; embedding of lower orders.
  auto z6 = f12.embed({6, 1});
  CHECK(z6 == f12.root(2));

  CHECK_THROWS_AS(CyclotomicField(10001), std::invalid_argument);
}

TEST_CASE("unit root pair sums reproduce the stabilizer totals") {
  using Pair = std::pair<RootOfUnitySpec, RootOfUnitySpec>;
  // Order-4 stabilizer: (-1, i) and (-1, -i) give 1/2.
  std::vector<Pair> c2a = {{{4, 2}, {4, 1}}, {{4, 2}, {4, 3}}};
  CHECK(moduli::unit_root_pair_sum(c2a, {1, 1}) == Rational(1, 2));

  // Order-3 pair: (rho, rho^2) and (rho^2, rho) give 2/3.
  std::vector<Pair> c2b = {{{3, 1}, {3, 2}}, {{3, 2}, {3, 1}}};
  CHECK(moduli::unit_root_pair_sum(c2b, {1, 1}) == Rational(2, 3));

  // Single involution pair gives 1/4.
  std::vector<Pair> invol = {{{2, 1}, {2, 1}}};
  CHECK(moduli::unit_root_pair_sum(invol, {1}) == Rational(1, 4));

  // Signs flip terms.
  CHECK(moduli::unit_root_pair_sum(invol, {-1}) == Rational(-1, 4));

  // Galois-unstable input is rejected.
  std::vector<Pair> unstable = {{{4, 1}, {2, 1}}};
  CHECK_THROWS_AS(moduli::unit_root_pair_sum(unstable, {1}),
                  std::domain_error);

  // Order overflow beyond 10^4.
  std::vector<Pair> huge = {{{9973, 1}, {9967, 1}}};
  CHECK_THROWS_AS(moduli::unit_root_pair_sum(huge, {1}),
                  std::invalid_argument);
}

TEST_CASE("eisenstein oracle for the order-3 pair sum") {
  const EisensteinRational one{1, 0};
  const EisensteinRational rho{0, 1};
  const EisensteinRational rho2 = rho * rho;
  // 1/((1-rho^-1)(1-rho^-2)) + 1/((1-rho^-2)(1-rho^-1)); inverses swap
  // rho and rho^2.
  EisensteinRational t1 = ((one - rho2) * (one - rho)).reciprocal();
  EisensteinRational t2 = ((one - rho) * (one - rho2)).reciprocal();
  EisensteinRational acc = t1 + t2;
  REQUIRE(acc.is_rational());
  CHECK(acc.a == Rational(2, 3));
}

TEST_CASE("rotation sums for single angles") {
  // theta = pi: u = 1/2, v = -1/4.
  auto s = moduli::rotation_sums({{2, 1}});
  CHECK(s.u_sum == Rational(1, 2));
  CHECK(s.v_sum == Rational(-1, 4));
  // Full orbit of order 4 matches lemma 7 at n = 4.
  auto s4 = moduli::rotation_sums({{4, 1}, {4, 2}, {4, 3}});
  CHECK(s4.u_sum == moduli::lemma7_sum(Lemma7Kind::simple, 4));
  CHECK(s4.v_sum == moduli::lemma7_sum(Lemma7Kind::double_pole, 4));
  // A lone quarter turn is not Galois-stable.
  CHECK_THROWS_AS(moduli::rotation_sums({{4, 1}}), std::domain_error);
}

TEST_CASE("pair sums agree with high-precision floating summation") {
  using Pair = std::pair<RootOfUnitySpec, RootOfUnitySpec>;
  const std::vector<std::vector<Pair>> lists = {
      {{{4, 2}, {4, 1}}, {{4, 2}, {4, 3}}},
      {{{3, 1}, {3, 2}}, {{3, 2}, {3, 1}}},
      {{{2, 1}, {2, 1}}},
  };
  const MpfrComplex one = MpfrComplex::from_long(1, 350);
  for (const auto& pairs : lists) {
    std::vector<int> signs(pairs.size(), 1);
    const double exact =
        moduli::unit_root_pair_sum(pairs, signs).to_double();
    MpfrComplex acc(350);
    for (const auto& [a, b] : pairs) {
      const MpfrComplex ia =
          MpfrComplex::root_of_unity(-a.exponent, a.order, 350);
      const MpfrComplex ib =
          MpfrComplex::root_of_unity(-b.exponent, b.order, 350);
      acc = acc + ((one - ia) * (one - ib)).reciprocal();
    }
    CHECK(std::abs(acc.real() - exact) <= 1e-9 * std::abs(exact));
    CHECK(std::abs(acc.imag()) < 1e-40);
  }
}
