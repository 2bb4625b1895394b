// Expression DSL for divisor classes and degree-3 intersection queries:
// rational linear combinations of L, R, D, E; '^3' on a parenthesized
// expression; prod(e1, e2, e3).
#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "moduli/divisor.hpp"

namespace moduli {

/// Total degree mismatch at evaluation ("degree must be 3").
struct DegreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisorExpr;
using DivisorExprPtr = std::shared_ptr<const DivisorExpr>;

struct DivisorExpr {
  enum class Kind { Linear, Sum, Pow, Prod };
  Kind kind;
  DivisorClass linear;               // Kind::Linear
  std::vector<DivisorExprPtr> args;  // Sum / Prod operands, Pow base
  std::vector<int> arg_signs;        // Sum only, +1 / -1
  unsigned exponent = 0;             // Pow only
};

DivisorExprPtr parse_divisor_expr(std::string_view text);

/// Evaluates an expression that must have total degree 3; cubing expands
/// to prod(e, e, e). Throws DegreeError otherwise.
Poly evaluate_product(const DivisorExpr& expr, const TrilinearForm& form);
inline Poly evaluate_product(const DivisorExprPtr& expr,
                             const TrilinearForm& form) {
  return evaluate_product(*expr, form);
}

}  // namespace moduli
