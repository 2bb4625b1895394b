#include "moduli/fine_divisor.hpp"

#include <stdexcept>

namespace moduli {

std::string fine_sym_name(FineSym s) {
  switch (s) {
    case FineSym::L: return "L";
    case FineSym::H1: return "H1";
    case FineSym::H2: return "H2";
    case FineSym::T1: return "T1";
    case FineSym::D0: return "D0";
    case FineSym::Dper: return "Dper";
    case FineSym::E1: return "E1";
    case FineSym::E2: return "E2";
    case FineSym::E3: return "E3";
    case FineSym::E4: return "E4";
    case FineSym::E5: return "E5";
  }
  throw std::logic_error("fine_sym_name: bad symbol");
}

namespace {

Poly half_kappa() { return Poly::kappa() / Rational(2); }

}  // namespace

std::vector<FineComponentFamily> fine_divisor_model() {
  return {
      {FineSym::L, Poly(1), true},
      {FineSym::H1, Poly(1), true},
      {FineSym::H2, Poly(1), true},
      {FineSym::T1, Poly(1), false},
      {FineSym::D0, Poly(1), true},
      {FineSym::Dper, half_kappa(), true},
      {FineSym::E1, Poly(1), true},
      {FineSym::E2, Poly(1), true},
      {FineSym::E3, half_kappa(), true},
      {FineSym::E4, half_kappa(), true},
      {FineSym::E5, half_kappa(), true},
  };
}

Rational c_coefficient(long a, long p) {
  if (p < 1) throw std::invalid_argument("c_coefficient: bad p");
  long r = a % p;
  return r == 0 ? Rational(p * p) : Rational(1);
}

std::vector<SixtyLTerm> sixty_L_class() {
  return {
      {FineSym::H1, 6, Poly(1), false},
      {FineSym::T1, 12, Poly(1), false},
      {FineSym::D0, 6, Poly(1), false},
      {FineSym::Dper, 6, half_kappa(), true},
      {FineSym::E1, 3, Poly(1), false},
      {FineSym::E2, 2, Poly(1), false},
      {FineSym::E3, 3, half_kappa(), true},
      {FineSym::E4, 2, half_kappa(), true},
      {FineSym::E5, 4, half_kappa(), true},
  };
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long divisor_census(long p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("divisor_census: p must be a prime >= 5");
  long total = 0;
  for (const auto& fam : fine_divisor_model()) {
    if (!fam.census_eligible) continue;
    Rational n = fam.count.eval_p(Rational(p));
    if (!n.is_integer() || n.sign() < 0)
      throw std::logic_error("divisor_census: non-integral family count");
    total += n.num().get_si();
  }
  return total;
}

Poly divisor_census_symbolic() {
  Poly total;
  for (const auto& fam : fine_divisor_model())
    if (fam.census_eligible) total += fam.count;
  return total;
}

}  // namespace moduli
