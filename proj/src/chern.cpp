#include "moduli/chern.hpp"

#include <stdexcept>

#include "moduli/dimension.hpp"
#include "moduli/lefschetz.hpp"

namespace moduli {

namespace {

Poly p_pow(int e) { return Poly::monomial(1, e, 0); }

const HypersurfaceData& row(const std::vector<HypersurfaceData>& t4,
                            const std::string& name) {
  for (const auto& h : t4)
    if (h.name == name) return h;
  throw std::invalid_argument("table 4: unknown hypersurface '" + name + "'");
}

}  // namespace

std::vector<HypersurfaceData> table4() {
  const Poly kappa = Poly::kappa();
  const Poly p = Poly::var_p();
  const Poly half_kappa = kappa / Rational(2);
  return {
      {"H1", -(p - Poly(6)) * kappa / Rational(6),
       (p + Poly(6)) * kappa / Rational(12), Rational(1, 2), Poly(1)},
      {"H2", -(p - Poly(21)) * kappa / Rational(6),
       (p + Poly(3)) * kappa / Rational(12), Rational(1, 2), Poly(1)},
      {"Dper", Poly(9), Poly(1), Rational(1), half_kappa},
      {"E1", -(p - Poly(6)) * kappa / Rational(6), kappa, Rational(1, 4),
       Poly(1)},
      {"E2", -(p - Poly(6)) * kappa / Rational(6),
       Poly(Rational(3, 2)) * kappa, Rational(1, 2), Poly(1)},
      {"E3", Poly(3), Poly(6), Rational(1, 4), half_kappa},
      {"E4", Poly(4), Poly(6), Rational(0), half_kappa},
      {"E5", Poly(3), Poly(6), Rational(0), half_kappa},
  };
}

Rational SurfaceClassModel::intersect(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) const {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      acc += a[i] * pairing[i][j] * b[j];
  return acc;
}

Rational SurfaceClassModel::c2_dot() const {
  return euler - intersect(K_surface, self_class);
}

SurfaceClassModel g_component_model() {
  // Generators h, e1, e2, e3 with h^2 = 1, ei^2 = -1, mixed products 0.
  SurfaceClassModel m;
  m.generators = {"h", "e1", "e2", "e3"};
  m.pairing = {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  m.K_surface = {-3, 1, 1, 1};
  m.self_class = {-1, 0, 0, 0};
  m.euler = Rational(6);
  return m;
}

SurfaceClassModel f_top_component_model() {
  // Ruled surface generators b, f: b^2 = -1, f^2 = 0, b.f = 1.
  SurfaceClassModel m;
  m.generators = {"b", "f"};
  m.pairing = {{-1, 1}, {1, 0}};
  m.K_surface = {-2, -3};
  m.self_class = {-1, -3};
  m.euler = Rational(4);
  return m;
}

SurfaceClassModel f_quadric_component_model() {
  // Quadric generators b, f: b^2 = f^2 = 0, b.f = 1.
  SurfaceClassModel m;
  m.generators = {"b", "f"};
  m.pairing = {{0, 1}, {1, 0}};
  m.K_surface = {-2, -2};
  m.self_class = {-1, -4};
  m.euler = Rational(4);
  return m;
}

Poly c2_dot_smooth(const std::string& name,
                   const std::vector<HypersurfaceData>& t4) {
  const auto& h = row(t4, name);
  return h.euler - h.K_dot_N;
}

Poly c2_dot_smooth_total(const std::string& name,
                         const std::vector<HypersurfaceData>& t4) {
  const auto& h = row(t4, name);
  return (h.euler - h.K_dot_N) * h.count;
}

BlowupCorrections blowup_corrections(const std::vector<HypersurfaceData>& t4) {
  const Poly kappa = Poly::kappa();
  const Poly p = Poly::var_p();
  BlowupCorrections out;

  // H2'': kappa/2 blown-up points raise the Euler number by one each; the
  // reduced exceptional curves F''_{H2} are disjoint (-1)-curves.
  {
    const auto& h2 = row(t4, "H2");
    const Poly euler_correction = kappa / Rational(2);
    const Poly f_self_total = kappa / Rational(2) * Poly(-1);
    out.c2_H2pp =
        h2.euler + euler_correction - h2.K_dot_N + Poly(2) * f_self_total;
  }

  // D0'': transcribed from the resolution computation.
  out.c2_D0pp = kappa * (Poly(3) * p_pow(2) - Poly(10) * p + Poly(3)) /
                    Rational(24) +
                Poly(6) * kappa * (p - Poly(5)) / Rational(12);

  // G'': kappa (p-5)/12 components of the blown-up plane model.
  out.c2_Gpp = kappa * (p - Poly(5)) / Rational(12) *
               Poly(g_component_model().c2_dot());

  // F'': kappa/2 top components and kappa/2 ((p-3)/4 - 1) quadric ones.
  {
    const Poly top_count = kappa / Rational(2);
    const Poly quadric_count =
        kappa / Rational(2) * ((p - Poly(3)) / Rational(4) - Poly(1));
    out.c2_Fpp = top_count * Poly(f_top_component_model().c2_dot()) +
                 quadric_count * Poly(f_quadric_component_model().c2_dot());
  }
  return out;
}

Poly c2_dot_L(const TrilinearForm& form) {
  const Poly d = group_index();
  const Poly rr = rr_cubic(form);
  const Poly yam = yamazaki_dim_poly();
  const TracePoly trace = total_trace_sum();

  const Poly lhs = d * rr - yam;  // Riemann-Roch side minus Yamazaki
  if (!(lhs.coeff_of_k(3) == Poly(0)))
    throw std::logic_error("c2_dot_L: k^3 residual does not vanish");
  if (!(lhs.coeff_of_k(2) == trace.k2))
    throw std::logic_error("c2_dot_L: k^2 coefficients do not match");

  // (d/12) c2.L = [trace - (d rr - yamazaki)]_{k^1}
  const Poly numerator = (trace.k1 - lhs.coeff_of_k(1)) * Poly(12);
  return numerator.divide_exact(d);
}

Poly c1_c2(const TrilinearForm& form,
           const std::vector<HypersurfaceData>& t4) {
  const Poly kappa = Poly::kappa();
  const auto blowup = blowup_corrections(t4);

  const Poly e_total = c2_dot_smooth("E1", t4) / Rational(2) +
                       c2_dot_smooth("E2", t4) +
                       kappa / Rational(2) * c2_dot_smooth("E3", t4) /
                           Rational(2);

  const Poly bracket = Poly(3) * c2_dot_L(form) - blowup.c2_D0pp -
                       c2_dot_smooth_total("Dper", t4) -
                       c2_dot_smooth("H1", t4) / Rational(2) -
                       blowup.c2_H2pp / Rational(2) - e_total / Rational(2) -
                       blowup.c2_Fpp - blowup.c2_Gpp;
  return -bracket;
}

Poly c1_cubed(const TrilinearForm& form) { return -k_cubed(form); }

Poly c3_euler() {
  const Poly p = Poly::var_p();
  return -Poly::kappa() *
         (p_pow(3) + Poly(431) * p - Poly(8760)) / Rational(1440);
}

Poly arithmetic_genus(const TrilinearForm& form) {
  return Poly(1) - c1_c2(form) / Rational(24);
}

Poly c2_dot_D0() {
  const Poly p = Poly::var_p();
  return Poly::kappa() *
         (Poly(3) * p_pow(2) - Poly(10) * p - Poly(3)) / Rational(24);
}

}  // namespace moduli
