// Genus-2 theta constants, the product Theta^2 of the squares of the ten
// even ones, and tolerance-based modularity checks.
#pragma once

#include <array>
#include <vector>

#include "moduli/siegel.hpp"

namespace moduli {

/// Characteristic m = (m', m'') in {0,1}^2 x {0,1}^2.
struct ThetaCharacteristic {
  std::array<int, 4> m;  // (m1', m2', m1'', m2'')

  /// Even iff m' . m'' = 0 mod 2; exactly 10 of the 16 are even.
  bool is_even() const {
    return (m[0] * m[2] + m[1] * m[3]) % 2 == 0;
  }
};

std::array<ThetaCharacteristic, 16> all_characteristics();
std::vector<ThetaCharacteristic> even_characteristics();

/// Theta constant Theta_m(tau) = sum over q in Z^2 of
/// exp(2 pi i [ (1/2)(q+m'/2) tau (q+m'/2)^t + (q+m'/2).(m''/2) ]),
/// truncated so the Gaussian tail bound is below eps. The summation
/// order is lexicographic and deterministic. Rejects eps <= 0 and
/// points with lambda_min(Im tau) < 1e-6.
Complex theta_constant(const ThetaCharacteristic& m, const SiegelPoint& tau,
                       double eps);

/// Product of the squares of the ten even theta constants.
Complex theta_squared_product(const SiegelPoint& tau, double eps);

/// Relative residual |F(g tau) - det(C tau + D)^w F(tau)| /
/// |det(C tau + D)^w F(tau)| with F = Theta^2 for weight 10 and
/// F = Theta^12 for weight 60.
double check_modularity(const SymplecticMatrix& g, const SiegelPoint& tau,
                        int weight, double eps);

/// Randomized certification drivers (deterministic per seed).
struct ThetaCheckResult {
  double max_residual = 0;
  int samples = 0;
};

/// Weight-10 (or weight-60) residuals over random group words applied to
/// random points.
ThetaCheckResult run_modularity_suite(int n_words, int n_points, int weight,
                                      unsigned seed, double eps);
/// |Theta^2| at points with tau2 = 0, relative to the product of the nine
/// factors that stay away from zero.
ThetaCheckResult run_vanishing_suite(int n_points, unsigned seed, double eps);
/// The six odd characteristics at random points (absolute values).
ThetaCheckResult run_odd_vanishing_suite(int n_points, unsigned seed,
                                         double eps);

}  // namespace moduli
