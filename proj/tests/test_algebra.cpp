#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moduli/poly.hpp"
#include "moduli/rational.hpp"

using moduli::ParseError;
using moduli::Poly;
using moduli::Rational;

namespace {

Poly p_pow(int e) { return Poly::monomial(1, e, 0); }

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(0, 5);
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  Poly r;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i)
    r += Poly::monomial(Rational(num(rng), den(rng)), deg(rng), deg(rng));
  return r;
}

}  // namespace

TEST_CASE("rational invariants") {
  Rational r(6, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  Rational neg(3, -6);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
  CHECK(Rational::from_string("68") == Rational(68));
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-3, 4).reciprocal() == Rational(-4, 3));
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::invalid_argument);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(79, 3).str() == "79/3");
}

TEST_CASE("poly arithmetic identities") {
  const Poly kappa = Poly::kappa();
  CHECK(kappa + Poly(0) == kappa);
  CHECK((Poly::var_p() - Poly(1)) * (Poly::var_p() + Poly(1)) == kappa);

  // K^3 polynomial evaluated at p = 5 gives 68.
  const Poly k3 = kappa *
                  (Poly(9) * p_pow(3) - Poly(360) * p_pow(2) +
                   Poly(1519) * Poly::var_p() + Poly(3000)) /
                  Rational(960);
  CHECK(k3.eval_p(5) == Rational(68));
}

TEST_CASE("poly evaluation") {
  const Poly kappa = Poly::kappa();
  CHECK(kappa.eval_p(5) == Rational(24));

  const Poly c1c2 = -kappa *
                    (Poly::var_p() - Poly(13)) *
                    (p_pow(2) - Poly(17) * Poly::var_p() + Poly(90)) /
                    Rational(240);
  CHECK(c1c2.eval_p(7) == Rational(24));

  const Poly d = p_pow(13) * kappa;
  Rational five13 = Rational(5).pow(13);
  CHECK(d.eval_p(5) == five13 * Rational(24));

  // Partial substitution keeps the other variable.
  const Poly mixed = Poly::var_k() * p_pow(2) + Poly::var_k();
  const Poly at_p5 = mixed.substitute_p(5);
  CHECK(at_p5 == Poly::var_k() * Poly(26));
  CHECK(mixed.eval(5, 2) == Rational(52));
  CHECK_THROWS_AS(mixed.eval_p(5), std::invalid_argument);
}

TEST_CASE("poly parsing") {
  const Poly a = Poly::parse("(7/144)*p*(p^2-1)");
  Poly expect = Poly::monomial(Rational(7, 144), 3, 0) -
                Poly::monomial(Rational(7, 144), 1, 0);
  CHECK(a == expect);

  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly::parse("0").str() == "0");

  const Poly l3 = Poly::parse("p*(p^4-1)/2880");
  CHECK(l3 == Poly::monomial(Rational(1, 2880), 5, 0) -
                  Poly::monomial(Rational(1, 2880), 1, 0));

  CHECK(Poly::parse("-k^2 + 3*p*k") ==
        Poly(3) * Poly::var_p() * Poly::var_k() - Poly::var_k().pow(2));
}

TEST_CASE("poly parse errors carry positions") {
  CHECK_THROWS_AS(Poly::parse("p +"), ParseError);
  CHECK_THROWS_AS(Poly::parse("(p"), ParseError);
  CHECK_THROWS_AS(Poly::parse("q"), ParseError);
  CHECK_THROWS_AS(Poly::parse("p^(2)"), ParseError);
  // Division only by nonzero constants.
  CHECK_THROWS_AS(Poly::parse("1/p"), ParseError);
  CHECK_THROWS_AS(Poly::parse("p/(p-1)"), ParseError);
  CHECK_THROWS_AS(Poly::parse("p/0"), ParseError);
  try {
    Poly::parse("p + @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("render round-trips") {
  const char* samples[] = {
      "(7/144)*p*(p^2-1)", "p*(p^4-1)/2880", "0",
      "-(19/144)*p*(p^2-1)", "((4*p-51)/12)*(p^2-1)",
      "2*k^3*p + k*(p^2-1) - 5",
  };
  for (const char* s : samples) {
    const Poly a = Poly::parse(s);
    CHECK(Poly::parse(a.str()) == a);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng);
    CHECK(Poly::parse(a.str()) == a);
  }
}

TEST_CASE("render style matches the CLI examples") {
  CHECK(Poly::parse("(7/144)*p*(p^2-1)").str() ==
        "(7/144)*p^3 - (7/144)*p");
  CHECK(Poly(Rational(79, 3)).str() == "79/3");
  CHECK((Poly::var_p().pow(2) - Poly(1)).str() == "p^2 - 1");
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(20260811);
  for (int i = 0; i < 300; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng),
               c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly(0));
    CHECK(a * Poly(1) == a);
  }
}

TEST_CASE("exact division") {
  const Poly kappa = Poly::kappa();
  const Poly prod = kappa * kappa * p_pow(3);
  CHECK(prod.divide_exact(kappa) == kappa * p_pow(3));
  CHECK(prod.divide_exact(kappa * kappa) == p_pow(3));
  CHECK_THROWS_AS(p_pow(2).divide_exact(kappa), std::domain_error);
  CHECK_THROWS_AS(kappa.divide_exact(Poly(0)), std::invalid_argument);
  // Division with k in play.
  const Poly f = (Poly::var_k() + kappa) * (Poly::var_k() - Poly(3));
  CHECK(f.divide_exact(Poly::var_k() - Poly(3)) == Poly::var_k() + kappa);
}
