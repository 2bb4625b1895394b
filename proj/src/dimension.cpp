#include "moduli/dimension.hpp"

#include <stdexcept>

#include "moduli/fine_divisor.hpp"

namespace moduli {

namespace {

Poly p_pow(int e) { return Poly::monomial(1, e, 0); }
Poly k_pow(int e) { return Poly::monomial(1, 0, e); }

void check_domain(long p, long k) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("dimension: p must be a prime >= 5");
  if (k < 12 || k % 12 != 0)
    throw std::invalid_argument(
        "dimension: k must be a positive multiple of 12");
}

Rational eval_dim(const Poly& poly, long p, long k) {
  Rational v = poly.eval(Rational(p), Rational(k));
  if (!v.is_integer() || v.sign() < 0)
    throw std::logic_error("dimension: evaluation is not a nonnegative integer");
  return v;
}

}  // namespace

Poly yamazaki_dim_poly() {
  const Poly kappa2 = Poly::kappa() * Poly::kappa();
  Poly bracket =
      k_pow(3) * (Poly(2) * p_pow(16) + Poly(2) * p_pow(14)) +
      k_pow(2) * (Poly(-9) * p_pow(16) - Poly(9) * p_pow(14)) +
      k_pow(1) * (Poly(13) * p_pow(16) + Poly(13) * p_pow(14) -
                  Poly(120) * p_pow(12) - Poly(120) * p_pow(10)) +
      (Poly(-6) * p_pow(16) - Poly(6) * p_pow(14) + Poly(180) * p_pow(12) +
       Poly(540) * p_pow(10) + Poly(360) * p_pow(8));
  return kappa2 * bracket / Rational(34560);
}

Poly gamma1p_dim_poly() {
  const Poly p = Poly::var_p();
  // The constant term is kept in the factored form (-6)(p-35)(p+2)(p+3).
  Poly k0 = Poly(-6) * (p - Poly(35)) * (p + Poly(2)) * (p + Poly(3));
  Poly bracket =
      k_pow(3) * (Poly(2) * p_pow(3) + Poly(2) * p_pow(1)) +
      k_pow(2) * (Poly(-9) * p_pow(3) + Poly(201) * p_pow(1)) +
      k_pow(1) * (Poly(13) * p_pow(3) - Poly(120) * p_pow(2) -
                  Poly(997) * p_pow(1) - Poly(840)) +
      k0;
  return Poly::kappa() * bracket / Rational(34560);
}

Rational dim_cusp_gamma2(long p, long k) {
  check_domain(p, k);
  return eval_dim(yamazaki_dim_poly(), p, k);
}

Rational dim_cusp_gamma1p(long p, long k) {
  check_domain(p, k);
  return eval_dim(gamma1p_dim_poly(), p, k);
}

Poly group_index() { return p_pow(13) * Poly::kappa(); }

}  // namespace moduli
