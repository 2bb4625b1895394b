#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "moduli/divisor.hpp"
#include "moduli/divisor_expr.hpp"
#include "moduli/fine_divisor.hpp"

using moduli::BasisSym;
using moduli::DegreeError;
using moduli::DivisorClass;
using moduli::Monomial3;
using moduli::ParseError;
using moduli::Poly;
using moduli::Rational;
using moduli::TrilinearForm;

namespace {

Poly p_pow(int e) { return Poly::monomial(1, e, 0); }

TrilinearForm shipped_form() {
  return TrilinearForm::load_file(moduli::default_table_path());
}

// Independent route for a symmetric cube: group the 4^3 ordered triples
// into the 20 unordered monomials with multinomial multiplicities.
Poly grouped_cube(const DivisorClass& a, const TrilinearForm& form) {
  Poly acc;
  const auto& basis = moduli::kBasis;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      for (std::size_t l = j; l < 4; ++l) {
        long mult;
        if (i == j && j == l)
          mult = 1;
        else if (i == j || j == l || i == l)
          mult = 3;
        else
          mult = 6;
        acc += Poly(mult) * a.coeff(basis[i]) * a.coeff(basis[j]) *
               a.coeff(basis[l]) * form.entry(basis[i], basis[j], basis[l]);
      }
  return acc;
}

DivisorClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  DivisorClass d;
  for (BasisSym s : moduli::kBasis)
    d.set_coeff(s, Poly(Rational(num(rng), den(rng))));
  return d;
}

}  // namespace

TEST_CASE("shipped table loads and has the expected entries") {
  const TrilinearForm form = shipped_form();
  const Poly kappa = Poly::kappa();
  const Poly p = Poly::var_p();
  CHECK(form.entry(BasisSym::L, BasisSym::L, BasisSym::R) ==
        Poly(Rational(7, 144)) * p * kappa);
  CHECK(form.entry(BasisSym::E, BasisSym::E, BasisSym::E) ==
        (Poly(19) * p + Poly(6)) * kappa / Rational(24));
  CHECK(form.entry(BasisSym::L, BasisSym::L, BasisSym::L) ==
        p * (p_pow(4) - Poly(1)) / Rational(2880));
  CHECK(form.entry(BasisSym::L, BasisSym::L, BasisSym::E) == Poly(0));
}

TEST_CASE("table entries parse sums of products") {
  std::istringstream in(
      "E.E.E = (19/24)*p*(p^2-1) + (6/24)*(p^2-1)\n"
      "L.L.R = (7/144)*p*(p^2-1)\nL.R.R = -(19/144)*p*(p^2-1)\n"
      "L.D.R = ((p+1)/6)*(p^2-1)\nL.E.R = (p/16)*(p^2-1)\n"
      "R.R.R = ((4*p-51)/12)*(p^2-1)\nR.D.R = -((p+9)/3)*(p^2-1)\n"
      "R.E.R = -((p-2)/8)*(p^2-1)\nD.D.R = (5/4)*(p^2-1)\n"
      "D.E.R = (p^2-1)\nE.E.R = -(1/4)*(p^2-1)\nL.L.E = 0\n"
      "L.D.E = 0\nL.E.E = -(7/48)*p*(p^2-1)\nD.D.E = (1/4)*(p^2-1)\n"
      "D.E.E = -2*(p^2-1)\nL.L.D = 0\nL.D.D = -((p^2+1)/24)*(p^2-1)\n"
      "D.D.D = -((11*p+18)/12)*(p^2-1)\nL.L.L = p*(p^4-1)/2880\n");
  const TrilinearForm form = TrilinearForm::load(in);
  CHECK(form.entry(BasisSym::E, BasisSym::E, BasisSym::E) ==
        (Poly(19) * Poly::var_p() + Poly(6)) * Poly::kappa() / Rational(24));
}

TEST_CASE("loader rejects incomplete or inconsistent tables") {
  // Missing D.D.D.
  std::istringstream missing("L.L.L = 1\n");
  CHECK_THROWS_WITH_AS(TrilinearForm::load(missing),
                       doctest::Contains("missing monomial"),
                       std::runtime_error);

  // The same monomial with two different values reports both.
  std::istringstream conflict(
      "L.E.R = (p/16)*(p^2-1)\n"
      "L.R.E = (p/8)*(p^2-1)\n");
  CHECK_THROWS_WITH_AS(TrilinearForm::load(conflict),
                       doctest::Contains("overlap inconsistency"),
                       std::runtime_error);

  // A third occurrence is a duplicate.
  std::istringstream triple(
      "L.E.R = 1\nL.R.E = 1\nE.L.R = 1\n");
  CHECK_THROWS_WITH_AS(TrilinearForm::load(triple),
                       doctest::Contains("duplicate monomial"),
                       std::runtime_error);

  // Keys are case-insensitive and order-insensitive.
  std::istringstream casein("r.e.l = (p/16)*(p^2-1)\nL.E.R = (p/16)*(p^2-1)\n");
  CHECK_THROWS_WITH_AS(TrilinearForm::load(casein),
                       doctest::Contains("duplicate monomial"),
                       std::runtime_error);
}

TEST_CASE("triple products match the tables") {
  const TrilinearForm form = shipped_form();
  const DivisorClass L = DivisorClass::basis(BasisSym::L);
  const DivisorClass R = DivisorClass::basis(BasisSym::R);
  const DivisorClass D = DivisorClass::basis(BasisSym::D);
  const DivisorClass E = DivisorClass::basis(BasisSym::E);
  const Poly kappa = Poly::kappa();

  CHECK(moduli::triple_product(L, L, R, form) ==
        Poly(Rational(7, 144)) * Poly::var_p() * kappa);
  CHECK(moduli::triple_product(L, L, E, form) == Poly(0));
  CHECK(moduli::triple_product(R, D, E, form) == kappa);
  CHECK(moduli::triple_product(E, D, R, form) == kappa);
}

TEST_CASE("triple product is symmetric in its arguments") {
  const TrilinearForm form = shipped_form();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const DivisorClass a = random_class(rng), b = random_class(rng),
                       c = random_class(rng);
    const Poly ref = moduli::triple_product(a, b, c, form);
    CHECK(moduli::triple_product(a, c, b, form) == ref);
    CHECK(moduli::triple_product(b, a, c, form) == ref);
    CHECK(moduli::triple_product(b, c, a, form) == ref);
    CHECK(moduli::triple_product(c, a, b, form) == ref);
    CHECK(moduli::triple_product(c, b, a, form) == ref);
  }
}

TEST_CASE("canonical class coefficients") {
  const DivisorClass k = moduli::canonical_class();
  CHECK(k.coeff(BasisSym::L) == Poly(3));
  CHECK(k.coeff(BasisSym::R) == Poly(Rational(-1, 2)));
  CHECK(k.coeff(BasisSym::D) == Poly(-1));
  CHECK(k.coeff(BasisSym::E) == Poly(Rational(-1, 2)));
}

TEST_CASE("K^3 closed form and expansion oracle") {
  const TrilinearForm form = shipped_form();
  const Poly k3 = moduli::k_cubed(form);
  const Poly expect = Poly::kappa() *
                      (Poly(9) * p_pow(3) - Poly(360) * p_pow(2) +
                       Poly(1519) * Poly::var_p() + Poly(3000)) /
                      Rational(960);
  CHECK(k3 == expect);
  CHECK(k3.eval_p(5) == Rational(68));

  // The 64-term ordered expansion agrees with the grouped 20-monomial one.
  CHECK(grouped_cube(moduli::canonical_class(), form) == k3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    const DivisorClass a = random_class(rng);
    CHECK(grouped_cube(a, form) == moduli::triple_product(a, a, a, form));
  }
}

TEST_CASE("Riemann-Roch cubic coefficients") {
  const TrilinearForm form = shipped_form();
  const Poly rr = moduli::rr_cubic(form);
  const Poly kappa = Poly::kappa();
  const Poly p = Poly::var_p();
  CHECK(rr.coeff_of_k(3) ==
        kappa * (Poly(2) * p_pow(3) + Poly(2) * p) / Rational(34560));
  CHECK(rr.coeff_of_k(2) ==
        kappa * (Poly(-9) * p_pow(3) + Poly(201) * p) / Rational(34560));
  CHECK(rr.coeff_of_k(1) ==
        kappa *
            (Poly(9) * p_pow(3) - Poly(120) * p_pow(2) - Poly(1481) * p -
             Poly(1080)) /
            Rational(34560));
  // Only L^3 survives at k^3: coefficient is 2 L^3 / 12.
  CHECK(rr.coeff_of_k(3) ==
        Poly(2) * form.entry(BasisSym::L, BasisSym::L, BasisSym::L) /
            Rational(12));
}

TEST_CASE("divisor expression DSL") {
  const TrilinearForm form = shipped_form();
  const Poly k3 = moduli::k_cubed(form);

  auto canonical = moduli::parse_divisor_expr("(3L - D - 1/2 R - 1/2 E)^3");
  CHECK(moduli::evaluate_product(canonical, form) == k3);

  auto l3 = moduli::parse_divisor_expr("prod(L, L, L)");
  CHECK(moduli::evaluate_product(l3, form) ==
        Poly::var_p() * (p_pow(4) - Poly(1)) / Rational(2880));

  auto llr = moduli::parse_divisor_expr("prod(L,L,R)");
  CHECK(moduli::evaluate_product(llr, form).str() ==
        "(7/144)*p^3 - (7/144)*p");

  // Linear expressions and wrong arities are degree errors.
  CHECK_THROWS_AS(
      moduli::evaluate_product(moduli::parse_divisor_expr("L + R"), form),
      DegreeError);
  CHECK_THROWS_AS(
      moduli::evaluate_product(moduli::parse_divisor_expr("prod(L,L)"), form),
      DegreeError);
  CHECK_THROWS_AS(
      moduli::evaluate_product(moduli::parse_divisor_expr("(L)^2"), form),
      DegreeError);

  // Sums of degree-3 terms work; mixing degrees does not.
  auto sum3 = moduli::parse_divisor_expr("prod(L,L,R) + prod(L,L,L)");
  CHECK(moduli::evaluate_product(sum3, form) ==
        moduli::evaluate_product(llr, form) +
            moduli::evaluate_product(l3, form));
  CHECK_THROWS_AS(moduli::evaluate_product(
                      moduli::parse_divisor_expr("prod(L,L,R) + L"), form),
                  DegreeError);

  // Syntax errors carry positions.
  CHECK_THROWS_AS(moduli::parse_divisor_expr("3X"), ParseError);
  CHECK_THROWS_AS(moduli::parse_divisor_expr("(3L"), ParseError);
  CHECK_THROWS_AS(moduli::parse_divisor_expr("prod(L, L, L"), ParseError);
}

TEST_CASE("divisor census") {
  CHECK(moduli::divisor_census(5) == 54);
  CHECK(moduli::divisor_census(7) == 102);
  for (long p : {11L, 13L, 37L})
    CHECK(moduli::divisor_census(p) == 2 * p * p + 4);
  CHECK_THROWS_AS(moduli::divisor_census(4), std::invalid_argument);
  CHECK_THROWS_AS(moduli::divisor_census(9), std::invalid_argument);
  CHECK_THROWS_AS(moduli::divisor_census(3), std::invalid_argument);

  CHECK(moduli::divisor_census_symbolic() ==
        Poly(2) * p_pow(2) + Poly(4));

  // Explicit enumeration at p = 5: L, H1+H2, D0, 12 peripheral, E1+E2,
  // 12 each of E3, E4, E5.
  long total = 1 + 2 + 1 + 12 + 2 + 36;
  CHECK(total == 54);

  // T1 is carried in the model but not counted.
  bool saw_t1 = false;
  for (const auto& fam : moduli::fine_divisor_model()) {
    if (fam.sym == moduli::FineSym::T1) {
      saw_t1 = true;
      CHECK(fam.count == Poly(1));
      CHECK_FALSE(fam.census_eligible);
    }
  }
  CHECK(saw_t1);
}

TEST_CASE("the divisor 60L") {
  const auto terms = moduli::sixty_L_class();
  auto find = [&](moduli::FineSym s) -> const moduli::SixtyLTerm& {
    for (const auto& t : terms)
      if (t.sym == s) return t;
    FAIL("missing 60L term");
    return terms[0];
  };
  CHECK(find(moduli::FineSym::H1).multiplicity == 6);
  CHECK(find(moduli::FineSym::T1).multiplicity == 12);
  CHECK(find(moduli::FineSym::D0).multiplicity == 6);
  CHECK(find(moduli::FineSym::Dper).multiplicity == 6);
  CHECK(find(moduli::FineSym::Dper).c_rule);
  CHECK(find(moduli::FineSym::E1).multiplicity == 3);
  CHECK_FALSE(find(moduli::FineSym::E1).c_rule);
  CHECK(find(moduli::FineSym::E2).multiplicity == 2);
  CHECK(find(moduli::FineSym::E3).multiplicity == 3);
  CHECK(find(moduli::FineSym::E3).c_rule);
  CHECK(find(moduli::FineSym::E4).multiplicity == 2);
  CHECK(find(moduli::FineSym::E5).multiplicity == 4);
  CHECK(find(moduli::FineSym::E5).c_rule);
  // Peripheral families run over (p^2-1)/2 indices.
  CHECK(find(moduli::FineSym::E3).count == Poly::kappa() / Rational(2));

  // Standard components carry p^2, the rest carry 1.
  CHECK(moduli::c_coefficient(0, 5) == Rational(25));
  CHECK(moduli::c_coefficient(10, 5) == Rational(25));
  CHECK(moduli::c_coefficient(3, 5) == Rational(1));
  CHECK(moduli::c_coefficient(7, 5) == Rational(1));
}
