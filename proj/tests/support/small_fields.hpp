// Exact Gaussian and Eisenstein rationals for independent sum oracles.
#pragma once

#include "moduli/rational.hpp"

namespace testsupport {

using moduli::Rational;

/// a + b*i with rational a, b.
struct GaussianRational {
  Rational a, b;

  GaussianRational operator+(const GaussianRational& o) const {
    return {a + o.a, b + o.b};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {a - o.a, b - o.b};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a};
  }
  GaussianRational reciprocal() const {
    Rational n = a * a + b * b;
    return {a / n, -b / n};
  }
  bool is_rational() const { return b == Rational(0); }
};

/// a + b*rho with rho = exp(2 pi i/3), rho^2 = -1 - rho.
struct EisensteinRational {
  Rational a, b;

  EisensteinRational operator+(const EisensteinRational& o) const {
    return {a + o.a, b + o.b};
  }
  EisensteinRational operator-(const EisensteinRational& o) const {
    return {a - o.a, b - o.b};
  }
  EisensteinRational operator*(const EisensteinRational& o) const {
    // (a + b rho)(c + d rho) = ac + (ad + bc) rho + bd rho^2
    Rational ac = a * o.a, bd = b * o.b;
    Rational cross = a * o.b + b * o.a;
    return {ac - bd, cross - bd};
  }
  EisensteinRational reciprocal() const {
    // Norm(a + b rho) = a^2 - ab + b^2; conjugate is a + b rho^2.
    Rational n = a * a - a * b + b * b;
    EisensteinRational conj{a - b, -b};
    return {conj.a / n, conj.b / n};
  }
  bool is_rational() const { return b == Rational(0); }
};

}  // namespace testsupport
