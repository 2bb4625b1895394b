// Fine divisor census and the structure of the divisor 60L.
#pragma once

#include <string>
#include <vector>

#include "moduli/poly.hpp"

namespace moduli {

/// Known irreducible divisor families on the desingularized space.
/// Dper, E3, E4, E5 each run over the (p^2-1)/2 peripheral indices.
enum class FineSym {
  L,
  H1,
  H2,
  T1,
  D0,
  Dper,
  E1,
  E2,
  E3,
  E4,
  E5,
};

std::string fine_sym_name(FineSym s);

struct FineComponentFamily {
  FineSym sym;
  Poly count;            // number of irreducible components, in p
  bool census_eligible;  // T1 is carried but not counted
};

/// The full family list with component counts.
std::vector<FineComponentFamily> fine_divisor_model();

/// Coefficient rule for peripheral indices: p^2 on standard components
/// (a = 0 mod p), 1 otherwise.
Rational c_coefficient(long a, long p);

/// One term of the divisor 60L: multiplicity * (c_{a,b} if c_rule) summed
/// over `count` components of `sym`.
struct SixtyLTerm {
  FineSym sym;
  long multiplicity;
  Poly count;
  bool c_rule;
};

/// 60L = 6 H1 + 12 T1 + 6 D0 + 6 sum c_ab D_ab + 3 E1 + 2 E2
///       + sum 3 c_ab E3 + sum c_ab (2 E4 + 4 E5).
std::vector<SixtyLTerm> sixty_L_class();

bool is_prime(long n);

/// Number of known independent divisor classes, 2p^2 + 4.
/// Requires p >= 5 prime.
long divisor_census(long p);
Poly divisor_census_symbolic();

}  // namespace moduli
