// Exact bivariate polynomials in p and k over Rational.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "moduli/rational.hpp"

namespace moduli {

/// Syntax error with the 0-based offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) +
                           ")"),
        pos(position) {}
  std::size_t pos;
};

/// Polynomial in the two variables p and k with Rational coefficients.
/// Terms are keyed by exponent pair; zero coefficients are never stored,
/// so equality of maps is equality of polynomials.
class Poly {
 public:
  struct Exp {
    int p = 0;
    int k = 0;
    auto operator<=>(const Exp&) const = default;
  };

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly var_p() { return monomial(1, 1, 0); }
  static Poly var_k() { return monomial(1, 0, 1); }
  static Poly monomial(const Rational& c, int deg_p, int deg_k) {
    if (deg_p < 0 || deg_k < 0)
      throw std::invalid_argument("Poly: negative exponent");
    Poly r;
    if (!c.is_zero()) r.terms_[{deg_p, deg_k}] = c;
    return r;
  }

  /// p^2 - 1, the paper-wide shorthand.
  static Poly kappa() { return monomial(1, 2, 0) - Poly(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
  }
  /// Value of a constant polynomial; throws for nonconstant input.
  Rational constant_value() const {
    if (!is_constant()) throw std::invalid_argument("Poly: not constant");
    return coeff(0, 0);
  }

  int deg_p() const;
  int deg_k() const;
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(int deg_p, int deg_k) const {
    auto it = terms_.find({deg_p, deg_k});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// The polynomial in p multiplying k^deg_k.
  Poly coeff_of_k(int deg_k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;

  /// Division by a nonzero constant.
  Poly operator/(const Rational& c) const;

  /// Exact polynomial division; throws std::domain_error if the divisor
  /// does not divide exactly.
  Poly divide_exact(const Poly& divisor) const;

  /// Substitutes a value for p (resp. k); the other variable survives.
  Poly substitute_p(const Rational& value) const;
  Poly substitute_k(const Rational& value) const;
  /// Total evaluation.
  Rational eval(const Rational& p_val, const Rational& k_val) const;
  /// Evaluation of a k-free polynomial at p; throws if k occurs.
  Rational eval_p(const Rational& p_val) const;

  /// Partial or total substitution in one call: either argument may be
  /// absent, in which case that variable is left untouched.
  Poly eval_partial(const std::optional<Rational>& p_val,
                    const std::optional<Rational>& k_val) const;

  /// Canonical rendering, parseable by parse(); k-major term order.
  /// Examples: "(7/144)*p^3 - (7/144)*p", "0", "p^2 - 1".
  std::string str() const;

  /// Parses the polynomial grammar: integers, rationals a/b, variables
  /// p and k, operators + - * / ^, parentheses. '/' only by nonzero
  /// constants, '^' only by nonnegative integer literals.
  static Poly parse(std::string_view text);

  const std::map<Exp, Rational>& terms() const { return terms_; }

 private:
  void set(Exp e, Rational c) {
    if (c.is_zero())
      terms_.erase(e);
    else
      terms_[e] = std::move(c);
  }
  std::map<Exp, Rational> terms_;
};

}  // namespace moduli
