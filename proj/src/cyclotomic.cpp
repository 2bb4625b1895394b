#include "moduli/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace moduli {

Rational lemma7_sum(Lemma7Kind kind, long n) {
  if (n < 2) throw std::invalid_argument("lemma7_sum: n must be >= 2");
  switch (kind) {
    case Lemma7Kind::simple:
      return Rational(n - 1, 2);
    case Lemma7Kind::double_pole:
      return Rational(-(n * n - 1), 12);
  }
  throw std::invalid_argument("lemma7_sum: bad kind");
}

// ---------------------------------------------------------------------------
// Dense univariate helpers over Rational (constant coefficient first).
// ---------------------------------------------------------------------------
namespace {

using UniPoly = std::vector<Rational>;

void trim(UniPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int uni_degree(const UniPoly& a) { return static_cast<int>(a.size()) - 1; }

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

UniPoly uni_scale(UniPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(UniPoly num, const UniPoly& den) {
  if (den.empty()) throw std::invalid_argument("divmod: zero divisor");
  UniPoly quot(num.size() > den.size() ? num.size() - den.size() + 1 : 1,
               Rational(0));
  const Rational lead = den.back();
  while (uni_degree(num) >= uni_degree(den)) {
    int shift = uni_degree(num) - uni_degree(den);
    Rational c = num.back() / lead;
    quot[static_cast<std::size_t>(shift)] += c;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[static_cast<std::size_t>(shift) + i] -= c * den[i];
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

// Extended Euclid: returns (g, s) with s*a == g mod m, g the monic gcd.
std::pair<UniPoly, UniPoly> half_ext_gcd(UniPoly a, UniPoly m) {
  UniPoly r0 = std::move(m), r1 = std::move(a);
  UniPoly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    UniPoly s2 = uni_sub(s0, uni_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) throw std::logic_error("half_ext_gcd: zero inputs");
  Rational inv_lead = r0.back().reciprocal();
  return {uni_scale(r0, inv_lead), uni_scale(s0, inv_lead)};
}

int moebius(long m) {
  int mu = 1;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    m /= q;
    if (m % q == 0) return 0;
    mu = -mu;
  }
  if (m > 1) mu = -mu;
  return mu;
}

UniPoly x_pow_minus_one(long d) {
  UniPoly f(static_cast<std::size_t>(d) + 1, Rational(0));
  f[0] = Rational(-1);
  f[static_cast<std::size_t>(d)] = Rational(1);
  return f;
}

// Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}.
UniPoly cyclotomic_poly(long n) {
  UniPoly num = {Rational(1)};
  std::vector<long> div_denoms;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(n / d);
    if (mu == 1)
      num = uni_mul(num, x_pow_minus_one(d));
    else if (mu == -1)
      div_denoms.push_back(d);
  }
  for (long d : div_denoms) {
    auto [q, r] = divmod(std::move(num), x_pow_minus_one(d));
    if (!r.empty()) throw std::logic_error("cyclotomic_poly: inexact division");
    num = std::move(q);
  }
  return num;
}

}  // namespace

// ---------------------------------------------------------------------------
// CyclotomicField
// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(long n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CyclotomicField: order must be >= 1");
  if (n > kMaxOrder)
    throw std::invalid_argument("CyclotomicField: order overflow (> 10^4)");
  phi_ = cyclotomic_poly(n);
}

CyclotomicField::Elem CyclotomicField::zero() const {
  return Elem(static_cast<std::size_t>(degree()), Rational(0));
}

CyclotomicField::Elem CyclotomicField::one() const {
  Elem e = zero();
  e[0] = Rational(1);
  return e;
}

CyclotomicField::Elem CyclotomicField::from_rational(const Rational& r) const {
  Elem e = zero();
  e[0] = r;
  return e;
}

CyclotomicField::Elem CyclotomicField::root(long exponent) const {
  long e = exponent % n_;
  if (e < 0) e += n_;
  // x^e reduced mod Phi_n.
  UniPoly x(static_cast<std::size_t>(e) + 1, Rational(0));
  x[static_cast<std::size_t>(e)] = Rational(1);
  auto [q, r] = divmod(std::move(x), phi_);
  (void)q;
  Elem out = zero();
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::embed(
    const RootOfUnitySpec& spec) const {
  if (spec.order < 1)
    throw std::invalid_argument("embed: root order must be positive");
  if (n_ % spec.order != 0)
    throw std::invalid_argument("embed: root order does not divide field order");
  long e = spec.exponent % spec.order;
  if (e < 0) e += spec.order;
  return root(e * (n_ / spec.order));
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  UniPoly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  trim(pa);
  trim(pb);
  auto [q, r] = divmod(uni_mul(pa, pb), phi_);
  (void)q;
  Elem out = zero();
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return out;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

CyclotomicField::Elem CyclotomicField::inverse(const Elem& a) const {
  UniPoly pa(a.begin(), a.end());
  trim(pa);
  if (pa.empty())
    throw std::invalid_argument("CyclotomicField: inverse of zero");
  auto [g, s] = half_ext_gcd(pa, phi_);
  if (uni_degree(g) != 0)
    throw std::logic_error("CyclotomicField: element not invertible");
  UniPoly inv = uni_scale(s, g[0].reciprocal());
  auto [q, r] = divmod(std::move(inv), phi_);
  (void)q;
  Elem out = zero();
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return out;
}

bool CyclotomicField::is_rational(const Elem& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

Rational CyclotomicField::rational_value(const Elem& a) const {
  if (!is_rational(a))
    throw std::domain_error("CyclotomicField: value is not rational");
  return a.empty() ? Rational(0) : a[0];
}

// ---------------------------------------------------------------------------
// Sums
// ---------------------------------------------------------------------------
namespace {

long lcm_checked(long a, long b) {
  long g = std::gcd(a, b);
  long l = a / g * b;
  if (l > CyclotomicField::kMaxOrder)
    throw std::invalid_argument("unit root sum: order overflow (> 10^4)");
  return l;
}

}  // namespace

Rational unit_root_pair_sum(
    const std::vector<std::pair<RootOfUnitySpec, RootOfUnitySpec>>& elements,
    const std::vector<int>& signs) {
  if (elements.size() != signs.size())
    throw std::invalid_argument("unit_root_pair_sum: size mismatch");
  long n = 1;
  for (const auto& [a, b] : elements) {
    if (a.order < 1 || b.order < 1)
      throw std::invalid_argument("unit_root_pair_sum: bad root order");
    n = lcm_checked(n, a.order);
    n = lcm_checked(n, b.order);
  }
  CyclotomicField F(n);
  auto acc = F.zero();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& [a, b] = elements[i];
    auto ainv = F.embed({a.order, -a.exponent});
    auto binv = F.embed({b.order, -b.exponent});
    auto fa = F.sub(F.one(), ainv);
    auto fb = F.sub(F.one(), binv);
    auto term = F.inverse(F.mul(fa, fb));
    if (signs[i] == -1)
      acc = F.sub(acc, term);
    else if (signs[i] == 1)
      acc = F.add(acc, term);
    else
      throw std::invalid_argument("unit_root_pair_sum: signs must be +/-1");
  }
  return F.rational_value(acc);
}

AngleSums rotation_sums(const std::vector<RootOfUnitySpec>& angles) {
  long n = 1;
  for (const auto& a : angles) {
    if (a.order < 1)
      throw std::invalid_argument("rotation_sums: bad root order");
    n = lcm_checked(n, a.order);
  }
  CyclotomicField F(n);
  auto u_acc = F.zero();
  auto v_acc = F.zero();
  for (const auto& a : angles) {
    auto inv_root = F.embed({a.order, -a.exponent});  // e^{-i theta}
    auto denom = F.sub(F.one(), inv_root);
    auto u = F.inverse(denom);
    auto v = F.mul(inv_root, F.mul(u, u));
    u_acc = F.add(u_acc, u);
    v_acc = F.add(v_acc, v);
  }
  return {F.rational_value(u_acc), F.rational_value(v_acc)};
}

}  // namespace moduli
