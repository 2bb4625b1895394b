#include "moduli/lefschetz.hpp"

#include <stdexcept>

namespace moduli {

std::string trace_case_name(TraceCase c) {
  switch (c) {
    case TraceCase::c1a: return "1a";
    case TraceCase::c1b: return "1b";
    case TraceCase::c1c: return "1c";
    case TraceCase::c2a: return "2a";
    case TraceCase::c2b: return "2b";
    case TraceCase::c2c_B1: return "2c_B1";
    case TraceCase::c2c_B2: return "2c_B2";
  }
  throw std::logic_error("trace_case_name: bad case");
}

TraceCase trace_case_from_name(const std::string& name) {
  if (name == "1a") return TraceCase::c1a;
  if (name == "1b") return TraceCase::c1b;
  if (name == "1c") return TraceCase::c1c;
  if (name == "2a") return TraceCase::c2a;
  if (name == "2b") return TraceCase::c2b;
  if (name == "2c_B1") return TraceCase::c2c_B1;
  if (name == "2c_B2") return TraceCase::c2c_B2;
  throw std::invalid_argument("unknown trace case '" + name + "'");
}

namespace {

Poly p_pow(int e) { return Poly::monomial(1, e, 0); }

// Angle sums over a record's element list: explicit lists are evaluated
// exactly in the cyclotomic field; the closed-form marker stands for all
// nontrivial p^2-th roots, with sums symbolic in p via lemma 7.
struct SymbolicAngleSums {
  Poly u_sum;
  Poly v_sum;
};

SymbolicAngleSums codim1_angle_sums(const FixedSetRecord& rec) {
  if (!rec.elements) {
    // sum 1/(1-xi^-j) = (n-1)/2 and sum xi^-j/(1-xi^-j)^2 = -(n^2-1)/12
    // over j = 1..n-1, with n = p^2.
    Poly u = (p_pow(2) - Poly(1)) / Rational(2);
    Poly v = -(p_pow(4) - Poly(1)) / Rational(12);
    return {u, v};
  }
  std::vector<RootOfUnitySpec> angles;
  for (const auto& el : *rec.elements) {
    if (el.size() != 1)
      throw std::invalid_argument(
          "trace_codim1: records carry exactly one angle per element");
    angles.push_back(el[0]);
  }
  AngleSums s = rotation_sums(angles);
  return {Poly(s.u_sum), Poly(s.v_sum)};
}

Poly codim2_pair_sum(const FixedSetRecord& rec) {
  if (!rec.elements) {
    // Angles (-1, xi^j) over all nontrivial p^2-th roots:
    // (1/2) * sum_j 1/(1-xi^-j) = (1/2)(p^2-1)/2.
    return (p_pow(2) - Poly(1)) / Rational(4);
  }
  std::vector<std::pair<RootOfUnitySpec, RootOfUnitySpec>> pairs;
  for (const auto& el : *rec.elements) {
    if (el.size() != 2)
      throw std::invalid_argument(
          "trace_codim2: records carry two angles per element");
    pairs.emplace_back(el[0], el[1]);
  }
  std::vector<int> signs(pairs.size(), 1);
  return Poly(unit_root_pair_sum(pairs, signs));
}

}  // namespace

std::vector<FixedSetRecord> builtin_fixed_sets() {
  const Poly kappa = Poly::kappa();
  const Poly kappa2 = kappa * kappa;

  std::vector<FixedSetRecord> recs;

  // 1a: H_1^*, involution, theta = pi.
  {
    FixedSetRecord r;
    r.id = TraceCase::c1a;
    r.codim = 1;
    r.chi_sign = 1;
    r.elements = {{RootOfUnitySpec{2, 1}}};
    r.L2X = p_pow(8) * kappa2 / Rational(288);
    r.LX2 = -p_pow(8) * kappa2 / Rational(288);
    r.LDX = p_pow(6) * kappa2 / Rational(24);
    r.component_count = p_pow(6);
    r.extra_factor = Rational(1);
    recs.push_back(std::move(r));
  }
  // 1b: H_2^*, involution; the 6:1 cover of H_1^* scales the squares by 6
  // and the boundary term by 3.
  {
    FixedSetRecord r;
    r.id = TraceCase::c1b;
    r.codim = 1;
    r.chi_sign = 1;
    r.elements = {{RootOfUnitySpec{2, 1}}};
    r.L2X = Poly(6) * p_pow(8) * kappa2 / Rational(288);
    r.LX2 = Poly(-6) * p_pow(8) * kappa2 / Rational(288);
    r.LDX = Poly(3) * p_pow(6) * kappa2 / Rational(24);
    r.component_count = p_pow(6);
    r.extra_factor = Rational(1);
    recs.push_back(std::move(r));
  }
  // 1c: boundary components, cyclic stabilizer of order p^2.
  {
    FixedSetRecord r;
    r.id = TraceCase::c1c;
    r.codim = 1;
    r.chi_sign = 1;
    r.elements = std::nullopt;  // all nontrivial p^2-th roots
    r.L2X = Poly(0);
    r.LX2 = -p_pow(6) * kappa / Rational(12);
    r.LDX = p_pow(6) * kappa / Rational(12);
    r.component_count = p_pow(4) * (p_pow(3) - Poly(1)) / Rational(2);
    r.extra_factor = Rational(1);
    recs.push_back(std::move(r));
  }
  // 2a: C_1^*, stabilizer of order 4; elements (-1, -i) and (-1, +i).
  {
    FixedSetRecord r;
    r.id = TraceCase::c2a;
    r.codim = 2;
    r.chi_sign = 1;
    r.elements = {{RootOfUnitySpec{2, 1}, RootOfUnitySpec{4, 3}},
                  {RootOfUnitySpec{2, 1}, RootOfUnitySpec{4, 1}}};
    r.degL = p_pow(4) * kappa / Rational(24);
    r.component_count = p_pow(10) * kappa / Rational(4);
    r.extra_factor = Rational(1);
    recs.push_back(std::move(r));
  }
  // 2b: C_2^*, stabilizer of order 6; elements (rho, rho^2), (rho^2, rho).
  {
    FixedSetRecord r;
    r.id = TraceCase::c2b;
    r.codim = 2;
    r.chi_sign = 1;
    r.elements = {{RootOfUnitySpec{3, 1}, RootOfUnitySpec{3, 2}},
                  {RootOfUnitySpec{3, 2}, RootOfUnitySpec{3, 1}}};
    r.degL = p_pow(4) * kappa / Rational(24);
    r.component_count = p_pow(10) * kappa / Rational(6);
    r.extra_factor = Rational(1);
    recs.push_back(std::move(r));
  }
  // 2c, B_1^*: angles (-1, xi^j) over nontrivial p^2-th roots, chi = -1.
  {
    FixedSetRecord r;
    r.id = TraceCase::c2c_B1;
    r.codim = 2;
    r.chi_sign = -1;
    r.elements = std::nullopt;
    r.degL = p_pow(4) * kappa / Rational(24);
    r.component_count =
        p_pow(8) * (p_pow(2) + p_pow(1) - Poly(2)) / Rational(2);
    r.extra_factor = Rational(1);
    recs.push_back(std::move(r));
  }
  // 2c, B_2^*: three times B_1^*.
  {
    FixedSetRecord r;
    r.id = TraceCase::c2c_B2;
    r.codim = 2;
    r.chi_sign = -1;
    r.elements = std::nullopt;
    r.degL = p_pow(4) * kappa / Rational(24);
    r.component_count =
        p_pow(8) * (p_pow(2) + p_pow(1) - Poly(2)) / Rational(2);
    r.extra_factor = Rational(3);
    recs.push_back(std::move(r));
  }
  return recs;
}

TracePoly trace_codim1(const FixedSetRecord& rec) {
  if (rec.codim != 1)
    throw std::invalid_argument("trace_codim1: record has codim != 1");
  auto [u, v] = codim1_angle_sums(rec);
  const Poly scale =
      Poly(rec.extra_factor) * Poly(rec.chi_sign) * rec.component_count;
  TracePoly t;
  t.k2 = scale * (rec.L2X / Rational(2)) * u;
  t.k1 = scale * ((-(Poly(Rational(3, 2)) * rec.L2X) -
                   rec.LDX / Rational(2) - rec.LX2 / Rational(2)) *
                      u -
                  rec.LX2 * v);
  return t;
}

TracePoly trace_codim2(const FixedSetRecord& rec) {
  if (rec.codim != 2)
    throw std::invalid_argument("trace_codim2: record has codim != 2");
  Poly s = codim2_pair_sum(rec);
  TracePoly t;
  t.k2 = Poly(0);
  t.k1 = Poly(rec.extra_factor) * Poly(rec.chi_sign) * s * rec.degL *
         rec.component_count;
  return t;
}

TracePoly trace_contribution(const FixedSetRecord& rec) {
  return rec.codim == 1 ? trace_codim1(rec) : trace_codim2(rec);
}

TracePoly trace_for_case(TraceCase c) {
  for (const auto& rec : builtin_fixed_sets())
    if (rec.id == c) return trace_contribution(rec);
  throw std::logic_error("trace_for_case: missing record");
}

TracePoly total_trace_sum() {
  TracePoly total;
  for (const auto& rec : builtin_fixed_sets())
    total += trace_contribution(rec);
  return total;
}

}  // namespace moduli
