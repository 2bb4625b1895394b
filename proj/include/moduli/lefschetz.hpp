// Holomorphic fixed-point contributions for the built-in fixed sets.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moduli/cyclotomic.hpp"
#include "moduli/poly.hpp"

namespace moduli {

enum class TraceCase { c1a, c1b, c1c, c2a, c2b, c2c_B1, c2c_B2 };

std::string trace_case_name(TraceCase c);       // "1a", ..., "2c_B2"
TraceCase trace_case_from_name(const std::string& name);

/// One fixed-set descriptor. Rotation angles are given either as explicit
/// root-of-unity lists (one angle per normal direction) or as a closed-form
/// marker: the element family runs over all nontrivial p^2-th roots and
/// the angle sums come from the lemma-7 closed forms, symbolic in p.
struct FixedSetRecord {
  TraceCase id;
  int codim;      // 1 or 2
  int chi_sign;   // character of the stabilizer action on O(-D), +1 or -1
  std::optional<std::vector<std::vector<RootOfUnitySpec>>> elements;
  Poly L2X;       // codim 1: L^2 . X per component
  Poly LDX;       // codim 1: L . D . X per component
  Poly LX2;       // codim 1: L . X^2 per component
  Poly degL;      // codim 2: deg L | X per component
  Poly component_count;
  Rational extra_factor;
};

/// k^2 and k^1 coefficients of a trace contribution, stored raw (as
/// summed); the k^0 coefficient is never computed.
struct TracePoly {
  Poly k2;
  Poly k1;

  TracePoly& operator+=(const TracePoly& o) {
    k2 += o.k2;
    k1 += o.k1;
    return *this;
  }
  friend TracePoly operator+(TracePoly a, const TracePoly& b) {
    return a += b;
  }
  friend bool operator==(const TracePoly& a, const TracePoly& b) {
    return a.k2 == b.k2 && a.k1 == b.k1;
  }
};

/// The seven records 1a, 1b, 1c, 2a, 2b, 2c_B1, 2c_B2 with the component
/// data and counts.
std::vector<FixedSetRecord> builtin_fixed_sets();

/// Codimension-1 contribution: with u = 1/(1-e^{-i theta}) and
/// v = e^{-i theta}/(1-e^{-i theta})^2 summed over the record's elements,
///   k^2: (1/2) L2X * u
///   k^1: (-(3/2) L2X - (1/2) LDX - (1/2) LX2) * u - LX2 * v
/// times component count, character sign and extra factor.
TracePoly trace_codim1(const FixedSetRecord& rec);

/// Codimension-2 contribution:
///   k^1: chi * extra * sum 1/((1-e^{-i theta_1})(1-e^{-i theta_2}))
///        * degL * component count;  k^2 is zero.
TracePoly trace_codim2(const FixedSetRecord& rec);

TracePoly trace_contribution(const FixedSetRecord& rec);

/// Contribution of one case t1..t7 from the built-in records.
TracePoly trace_for_case(TraceCase c);

/// t1 + ... + t7.
TracePoly total_trace_sum();

}  // namespace moduli
