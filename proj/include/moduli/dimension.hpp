// Dimension polynomials for spaces of cusp forms.
#pragma once

#include "moduli/poly.hpp"

namespace moduli {

/// dim S_k(Gamma_2(p^2)) as a polynomial in p and k:
/// (p^2-1)^2/34560 * [ k^3 (2p^16+2p^14) + k^2 (-9p^16-9p^14)
///   + k (13p^16+13p^14-120p^12-120p^10)
///   + (-6p^16-6p^14+180p^12+540p^10+360p^8) ].
Poly yamazaki_dim_poly();

/// dim S_k(Gamma_{1,p}) as a polynomial in p and k:
/// (p^2-1)/34560 * [ k^3 (2p^3+2p) + k^2 (-9p^3+201p)
///   + k (13p^3-120p^2-997p-840) + (-6)(p-35)(p+2)(p+3) ].
Poly gamma1p_dim_poly();

/// Evaluations on the validity domain p >= 5 prime, k >= 12, k = 0 mod 12.
/// The results are checked to be nonnegative integers.
Rational dim_cusp_gamma2(long p, long k);
Rational dim_cusp_gamma1p(long p, long k);

/// d = [Gamma_{1,p} : Gamma_2(p^2)] = p^13 (p^2 - 1).
Poly group_index();

}  // namespace moduli
