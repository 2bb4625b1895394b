#include "moduli/theta.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace moduli {

namespace {

constexpr double kLambdaFloor = 1e-6;

// Upper bound for the 1-D tail sum_{t >= R, unit steps} e^{-pi l t^2}
// by the first term plus a comparison integral.
double tail_1d(double lambda, double radius) {
  const double pil = std::numbers::pi * lambda;
  return std::exp(-pil * radius * radius) * (1.0 + 1.0 / (2 * pil * radius));
}

// Upper bound for the full 1-D sum sum_t e^{-pi l t^2}.
double full_1d(double lambda) { return 3.0 + 1.0 / std::sqrt(lambda); }

// Box radius so that the 2-D tail over |x|_inf > R stays below eps.
int truncation_radius(double lambda, double eps) {
  for (int radius = 2; radius <= 1 << 20; radius *= 2) {
    const double tail = 2.0 * 2.0 * tail_1d(lambda, radius) * full_1d(lambda);
    if (tail < eps) {
      // Shrink back to the smallest sufficient radius.
      int lo = radius / 2, hi = radius;
      while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (2.0 * 2.0 * tail_1d(lambda, mid) * full_1d(lambda) < eps)
          hi = mid;
        else
          lo = mid + 1;
      }
      return hi;
    }
  }
  throw std::domain_error("theta_constant: truncation radius would explode");
}

}  // namespace

std::array<ThetaCharacteristic, 16> all_characteristics() {
  std::array<ThetaCharacteristic, 16> out;
  for (int i = 0; i < 16; ++i)
    out[static_cast<std::size_t>(i)] =
        ThetaCharacteristic{{(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1}};
  return out;
}

std::vector<ThetaCharacteristic> even_characteristics() {
  std::vector<ThetaCharacteristic> out;
  for (const auto& m : all_characteristics())
    if (m.is_even()) out.push_back(m);
  return out;
}

Complex theta_constant(const ThetaCharacteristic& m, const SiegelPoint& tau,
                       double eps) {
  if (eps <= 0) throw std::invalid_argument("theta_constant: eps must be > 0");
  const double lambda = tau.lambda_min();
  if (lambda < kLambdaFloor)
    throw std::domain_error(
        "theta_constant: Im(tau) too close to the boundary");
  const int radius = truncation_radius(lambda, eps);

  const double a1 = m.m[0] / 2.0, a2 = m.m[1] / 2.0;
  const double b1 = m.m[2] / 2.0, b2 = m.m[3] / 2.0;
  const Complex t1 = tau.tau1(), t2 = tau.tau2(), t3 = tau.tau3();
  const double two_pi = 2 * std::numbers::pi;

  Complex acc(0, 0);
  for (long q1 = -radius - 1; q1 <= radius + 1; ++q1) {
    const double x1 = static_cast<double>(q1) + a1;
    for (long q2 = -radius - 1; q2 <= radius + 1; ++q2) {
      const double x2 = static_cast<double>(q2) + a2;
      // (1/2) x tau x^t + x . b
      const Complex quad =
          0.5 * (t1 * x1 * x1 + 2.0 * t2 * x1 * x2 + t3 * x2 * x2);
      const Complex phase = two_pi * (quad + Complex(x1 * b1 + x2 * b2, 0));
      // exp(i * 2pi * (...)): the quadratic part has positive imaginary
      // part, so the magnitude decays like a Gaussian.
      acc += std::exp(Complex(0, 1) * phase);
    }
  }
  return acc;
}

Complex theta_squared_product(const SiegelPoint& tau, double eps) {
  Complex prod(1, 0);
  for (const auto& m : even_characteristics()) {
    const Complex v = theta_constant(m, tau, eps);
    prod *= v * v;
  }
  return prod;
}

namespace {

Complex int_pow(Complex z, int e) {
  Complex r(1, 0);
  Complex base = z;
  for (int n = e; n > 0; n >>= 1) {
    if (n & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace

double check_modularity(const SymplecticMatrix& g, const SiegelPoint& tau,
                        int weight, double eps) {
  if (weight != 10 && weight != 60)
    throw std::invalid_argument(
        "check_modularity: weight must be 10 (Theta^2) or 60 (Theta^12)");
  const SiegelPoint moved = act(g, tau);
  const Complex det = automorphy_det(g, tau);
  Complex f_tau = theta_squared_product(tau, eps);
  Complex f_moved = theta_squared_product(moved, eps);
  if (weight == 60) {
    f_tau = int_pow(f_tau, 6);
    f_moved = int_pow(f_moved, 6);
  }
  const Complex expected = int_pow(det, weight) * f_tau;
  const double denom = std::abs(expected);
  if (denom == 0.0)
    throw std::domain_error("check_modularity: reference value vanishes");
  return std::abs(f_moved - expected) / denom;
}

// ---------------------------------------------------------------------------
// Randomized suites
// ---------------------------------------------------------------------------
namespace {

SiegelPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> diag(0.9, 1.5);
  std::uniform_real_distribution<double> off(-0.2, 0.2);
  return SiegelPoint(Complex(re(rng), diag(rng)), Complex(re(rng), off(rng)),
                     Complex(re(rng), diag(rng)));
}

SymplecticMatrix random_generator(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<long long> b(-1, 1);
  switch (pick(rng)) {
    case 0:
      return SymplecticMatrix::standard_J();
    case 1:
      return SymplecticMatrix::translation(b(rng), b(rng), b(rng));
    default: {
      std::uniform_int_distribution<int> upick(0, 3);
      switch (upick(rng)) {
        case 0: return SymplecticMatrix::gl_block(1, 1, 0, 1);
        case 1: return SymplecticMatrix::gl_block(1, 0, 1, 1);
        case 2: return SymplecticMatrix::gl_block(0, 1, -1, 0);
        default: return SymplecticMatrix::gl_block(1, 0, 0, -1);
      }
    }
  }
}

SymplecticMatrix random_word(std::mt19937_64& rng, int letters) {
  SymplecticMatrix w = SymplecticMatrix::identity();
  for (int i = 0; i < letters; ++i) w = w * random_generator(rng);
  return w;
}

}  // namespace

ThetaCheckResult run_modularity_suite(int n_words, int n_points, int weight,
                                      unsigned seed, double eps) {
  std::mt19937_64 rng(seed);
  ThetaCheckResult out;
  for (int w = 0; w < n_words; ++w) {
    const SymplecticMatrix g = random_word(rng, 5);
    for (int s = 0; s < n_points; ++s) {
      // Resample if the moved point falls below the boundary floor.
      for (int attempt = 0; attempt < 64; ++attempt) {
        const SiegelPoint tau = random_point(rng);
        try {
          const double r = check_modularity(g, tau, weight, eps);
          out.max_residual = std::max(out.max_residual, r);
          ++out.samples;
          break;
        } catch (const std::domain_error&) {
          continue;
        }
      }
    }
  }
  return out;
}

ThetaCheckResult run_vanishing_suite(int n_points, unsigned seed, double eps) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> diag(0.9, 1.5);
  ThetaCheckResult out;
  for (int s = 0; s < n_points; ++s) {
    const SiegelPoint tau(Complex(re(rng), diag(rng)), Complex(0, 0),
                          Complex(re(rng), diag(rng)));
    // Scale: the product of the nine factors that stay away from zero.
    double scale = 1.0;
    Complex full(1, 0);
    for (const auto& m : even_characteristics()) {
      const Complex v = theta_constant(m, tau, eps);
      full *= v * v;
      const bool vanishing_factor =
          m.m[0] == 1 && m.m[1] == 1 && m.m[2] == 1 && m.m[3] == 1;
      if (!vanishing_factor) scale *= std::norm(v);
    }
    const double rel = std::abs(full) / scale;
    out.max_residual = std::max(out.max_residual, rel);
    ++out.samples;
  }
  return out;
}

ThetaCheckResult run_odd_vanishing_suite(int n_points, unsigned seed,
                                         double eps) {
  std::mt19937_64 rng(seed);
  ThetaCheckResult out;
  for (int s = 0; s < n_points; ++s) {
    const SiegelPoint tau = random_point(rng);
    for (const auto& m : all_characteristics()) {
      if (m.is_even()) continue;
      const double v = std::abs(theta_constant(m, tau, eps));
      out.max_residual = std::max(out.max_residual, v);
      ++out.samples;
    }
  }
  return out;
}

}  // namespace moduli
