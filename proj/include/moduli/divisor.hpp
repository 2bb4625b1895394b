// Formal divisor classes over the basis {L, R, D, E} and the symmetric
// trilinear intersection form.
#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>

#include "moduli/poly.hpp"

namespace moduli {

/// The coarse basis: L (modular forms), R (ramification), D (boundary),
/// E (exceptional contribution).
enum class BasisSym : int { L = 0, R = 1, D = 2, E = 3 };

constexpr std::array<BasisSym, 4> kBasis = {BasisSym::L, BasisSym::R,
                                            BasisSym::D, BasisSym::E};

char basis_char(BasisSym s);
BasisSym basis_from_char(char c);  // case-insensitive; throws on others

/// Unordered degree-3 monomial over the basis (stored sorted).
struct Monomial3 {
  std::array<BasisSym, 3> syms;
  Monomial3(BasisSym a, BasisSym b, BasisSym c);
  auto operator<=>(const Monomial3&) const = default;
  std::string str() const;  // "L.L.R"
};

/// Formal combination of basis classes with Poly coefficients (rational
/// for fixed classes like K, polynomial in k for kL - D).
class DivisorClass {
 public:
  DivisorClass() = default;
  static DivisorClass basis(BasisSym s) {
    DivisorClass d;
    d.coeffs_[s] = Poly(1);
    return d;
  }

  Poly coeff(BasisSym s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Poly() : it->second;
  }
  void set_coeff(BasisSym s, Poly c) {
    if (c.is_zero())
      coeffs_.erase(s);
    else
      coeffs_[s] = std::move(c);
  }

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Poly& s, const DivisorClass& a);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  std::map<BasisSym, Poly> coeffs_;
};

/// The fully symmetric degree-3 intersection form on {L,R,D,E}: all 20
/// unordered monomials carry a Poly in p. Immutable after load.
class TrilinearForm {
 public:
  /// Parses table lines "A.B.C = <poly in p>" ('#' comments, symbols
  /// case-insensitive, key order-insensitive). A monomial may appear
  /// twice (once per source table); the values must then agree exactly.
  /// All 20 monomials must be covered.
  static TrilinearForm load(std::istream& in);
  static TrilinearForm load_file(const std::string& path);

  const Poly& entry(const Monomial3& m) const;
  const Poly& entry(BasisSym a, BasisSym b, BasisSym c) const {
    return entry(Monomial3(a, b, c));
  }

  const std::map<Monomial3, Poly>& entries() const { return entries_; }

 private:
  std::map<Monomial3, Poly> entries_;
};

/// Resolution order: explicit argument > MODULI_TABLE_PATH env var >
/// ./data/tables_hkw.txt > the build-time source path.
std::string default_table_path();

/// Trilinear expansion of a.b.c under the form; exact in Q[p,k].
Poly triple_product(const DivisorClass& a, const DivisorClass& b,
                    const DivisorClass& c, const TrilinearForm& form);

/// 3L - D - 1/2 R - 1/2 E.
DivisorClass canonical_class();

/// Self-intersection of the canonical class.
Poly k_cubed(const TrilinearForm& form);

/// (1/12)(kL-D)(kL-D-K)(2kL-2D-K) as a polynomial in p and k.
Poly rr_cubic(const TrilinearForm& form);

}  // namespace moduli
