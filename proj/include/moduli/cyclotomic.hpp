// Exact cyclotomic-field arithmetic and closed-form root-of-unity sums.
#pragma once

#include <utility>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

/// xi^exponent for xi = exp(2*pi*i/order).
struct RootOfUnitySpec {
  long order;     // n >= 1
  long exponent;  // any integer; reduced mod order internally
};

enum class Lemma7Kind { simple, double_pole };

/// Closed forms for the two standard sums over all nontrivial n-th roots:
///   simple:      sum_{j=1}^{n-1} 1/(1-xi^j)        = (n-1)/2
///   double_pole: sum_{j=1}^{n-1} xi^j/(1-xi^j)^2   = -(n^2-1)/12
/// Requires n >= 2.
Rational lemma7_sum(Lemma7Kind kind, long n);

/// Q(zeta_n) with elements stored densely modulo the n-th cyclotomic
/// polynomial. Orders above 10^4 are rejected.
class CyclotomicField {
 public:
  static constexpr long kMaxOrder = 10000;

  explicit CyclotomicField(long n);

  long order() const { return n_; }
  long degree() const { return static_cast<long>(phi_.size()) - 1; }

  using Elem = std::vector<Rational>;  // size degree(), coord i = zeta^i

  Elem zero() const;
  Elem one() const;
  Elem from_rational(const Rational& r) const;
  /// zeta_n^e, exponent taken mod n.
  Elem root(long exponent) const;
  /// Embeds a root of another order; the order must divide n.
  Elem embed(const RootOfUnitySpec& spec) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;  // throws on zero
  bool is_zero(const Elem& a) const;

  /// True iff all coordinates above the constant one vanish.
  bool is_rational(const Elem& a) const;
  /// Constant coordinate; throws if the element is not rational.
  Rational rational_value(const Elem& a) const;

  /// Coefficients of the n-th cyclotomic polynomial, constant first.
  const std::vector<Rational>& modulus() const { return phi_; }

 private:
  long n_;
  std::vector<Rational> phi_;  // monic, degree phi(n)
};

/// Exact value of sum_i sign_i / ((1 - a_i^{-1})(1 - b_i^{-1})) computed in
/// the cyclotomic field of order lcm of all orders. Throws if the result is
/// not rational or the common order exceeds 10^4.
Rational unit_root_pair_sum(
    const std::vector<std::pair<RootOfUnitySpec, RootOfUnitySpec>>& elements,
    const std::vector<int>& signs);

/// Exact totals of 1/(1 - a^{-1}) and a^{-1}/(1 - a^{-1})^2 over a list of
/// roots of unity; the totals must be rational (Galois-stable input).
struct AngleSums {
  Rational u_sum;  // sum of 1/(1 - e^{-i theta})
  Rational v_sum;  // sum of e^{-i theta}/(1 - e^{-i theta})^2
};
AngleSums rotation_sums(const std::vector<RootOfUnitySpec>& angles);

}  // namespace moduli
