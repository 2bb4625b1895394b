// Chern number pipeline: c2.L from the trace/Riemann-Roch comparison,
// c1.c2 from the hypersurface table plus blow-up corrections, and the
// remaining invariants.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "moduli/divisor.hpp"
#include "moduli/poly.hpp"

namespace moduli {

/// One row of the hypersurface table: Euler number, K_A . (A|A), the
/// coefficient with which A enters -c1, and the component count.
struct HypersurfaceData {
  std::string name;  // H1, H2, Dper, E1, E2, E3, E4, E5
  Poly euler;
  Poly K_dot_N;
  Rational multiplicity_in_K;
  Poly count;
};

/// The built-in table (per-component values for the aggregated families).
std::vector<HypersurfaceData> table4();

/// Tiny Picard-group model of a surface: generator pairing, canonical
/// class and self-intersection class in the generator basis.
struct SurfaceClassModel {
  std::vector<std::string> generators;
  std::vector<std::vector<Rational>> pairing;  // symmetric matrix
  std::vector<Rational> K_surface;             // K in generator basis
  std::vector<Rational> self_class;            // A|A in generator basis
  Rational euler;                              // c2 of the surface

  Rational intersect(const std::vector<Rational>& a,
                     const std::vector<Rational>& b) const;
  /// c2(ambient).A = euler - K_surface . self_class.
  Rational c2_dot() const;
};

/// P^2 blown up in three points (the G'' components).
SurfaceClassModel g_component_model();
/// P(O + O(1)) (the F'' top components).
SurfaceClassModel f_top_component_model();
/// P^1 x P^1 (the remaining F'' components).
SurfaceClassModel f_quadric_component_model();

/// c2 . A per component for a smooth hypersurface of the table:
/// euler - K_dot_N.
Poly c2_dot_smooth(const std::string& name,
                   const std::vector<HypersurfaceData>& t4 = table4());
/// Per-component value times component count.
Poly c2_dot_smooth_total(const std::string& name,
                         const std::vector<HypersurfaceData>& t4 = table4());

/// c2-products on the blow-up that resolves the central boundary surface.
struct BlowupCorrections {
  Poly c2_H2pp;
  Poly c2_D0pp;
  Poly c2_Gpp;
  Poly c2_Fpp;
};
BlowupCorrections blowup_corrections(
    const std::vector<HypersurfaceData>& t4 = table4());

/// Solves the k^1 coefficient of the trace/Riemann-Roch comparison for
/// c2.L; the k^3 and k^2 residuals vanish beforehand.
/// Result: (p^2-1)(p^3+121p+60)/720.
Poly c2_dot_L(const TrilinearForm& form);

/// Full assembly; equals -(p^2-1)/240 (p-13)(p^2-17p+90).
Poly c1_c2(const TrilinearForm& form,
           const std::vector<HypersurfaceData>& t4 = table4());

/// -K^3.
Poly c1_cubed(const TrilinearForm& form);

/// Euler number, -(p^2-1)/1440 (p^3+431p-8760).
Poly c3_euler();

/// 1 - c1.c2/24.
Poly arithmetic_genus(const TrilinearForm& form);

/// c2 . D0 = (p^2-1)/24 (3p^2-10p-3).
Poly c2_dot_D0();

}  // namespace moduli
