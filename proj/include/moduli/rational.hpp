// Exact rational arithmetic on top of GMP.
#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moduli {

/// Arbitrary-precision rational, always reduced to lowest terms with a
/// positive denominator. Zero is 0/1. Immutable value semantics.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "a" or "a/b" with optional sign.
  static Rational from_string(std::string_view s) {
    try {
      mpq_class v(std::string(s), 10);
      if (v.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator");
      v.canonicalize();
      return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" +
                                  std::string(s) + "'");
    }
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
  }

  Rational pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(n, d);
  }

  double to_double() const { return v_.get_d(); }

  /// "num/den", or just "num" for integers.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class&& v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace moduli
