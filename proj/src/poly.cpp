#include "moduli/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace moduli {

int Poly::deg_p() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.p);
  return d;
}

int Poly::deg_k() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.k);
  return d;
}

Poly Poly::coeff_of_k(int deg_k) const {
  Poly r;
  for (const auto& [e, c] : terms_)
    if (e.k == deg_k) r.terms_[{e.p, 0}] = c;
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e.p, e.k) + c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e.p, e.k) - c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exp e{ea.p + eb.p, ea.k + eb.k};
      r.set(e, r.coeff(e.p, e.k) + ca * cb);
    }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::operator/(const Rational& c) const {
  if (c.is_zero()) throw std::invalid_argument("Poly: division by zero");
  Poly r;
  for (const auto& [e, co] : terms_) r.terms_[e] = co / c;
  return r;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("Poly: division by zero polynomial");
  if (divisor.is_constant()) return *this / divisor.constant_value();
  // Reduction by the divisor's leading term in (deg_k, deg_p)-lex order.
  const auto lead = std::prev(divisor.terms_.end());
  const Exp dl = lead->first;
  const Rational dc = lead->second;
  Poly rem = *this;
  Poly quot;
  while (!rem.is_zero()) {
    const auto rl = std::prev(rem.terms_.end());
    const Exp e = rl->first;
    if (e.p < dl.p || e.k < dl.k)
      throw std::domain_error("Poly: division is not exact");
    Poly t = monomial(rl->second / dc, e.p - dl.p, e.k - dl.k);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Poly Poly::substitute_p(const Rational& value) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    Exp ne{0, e.k};
    r.set(ne, r.coeff(0, e.k) + c * value.pow(static_cast<unsigned>(e.p)));
  }
  return r;
}

Poly Poly::substitute_k(const Rational& value) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    Exp ne{e.p, 0};
    r.set(ne, r.coeff(e.p, 0) + c * value.pow(static_cast<unsigned>(e.k)));
  }
  return r;
}

Rational Poly::eval(const Rational& p_val, const Rational& k_val) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_)
    acc += c * p_val.pow(static_cast<unsigned>(e.p)) *
           k_val.pow(static_cast<unsigned>(e.k));
  return acc;
}

Rational Poly::eval_p(const Rational& p_val) const {
  if (deg_k() > 0)
    throw std::invalid_argument("Poly: eval_p on a polynomial involving k");
  return eval(p_val, 0);
}

Poly Poly::eval_partial(const std::optional<Rational>& p_val,
                        const std::optional<Rational>& k_val) const {
  Poly r = *this;
  if (p_val) r = r.substitute_p(*p_val);
  if (k_val) r = r.substitute_k(*k_val);
  return r;
}

namespace {

std::string render_coeff(const Rational& c) {
  if (c.is_integer()) return c.str();
  return "(" + c.str() + ")";
}

std::string render_vars(const Poly::Exp& e) {
  std::string s;
  if (e.p > 0) {
    s += "p";
    if (e.p > 1) s += "^" + std::to_string(e.p);
  }
  if (e.k > 0) {
    if (!s.empty()) s += "*";
    s += "k";
    if (e.k > 1) s += "^" + std::to_string(e.k);
  }
  return s;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // k-major descending, then p descending.
  std::vector<std::pair<Exp, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.k != b.first.k) return a.first.k > b.first.k;
    return a.first.p > b.first.p;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const std::string vars = render_vars(e);
    if (vars.empty()) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << vars;
    } else {
      os << render_coeff(mag) << "*" << vars;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the polynomial grammar.
// ---------------------------------------------------------------------------
namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly run() {
    Poly r = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }

  Poly expr() {
    Poly acc;
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      take();
      neg = (c == '-');
    }
    acc = neg ? -term() : term();
    while (true) {
      c = peek();
      if (c == '+' || c == '-') {
        take();
        Poly t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        take();
        acc *= power();
      } else if (c == '/') {
        std::size_t at = pos_;
        take();
        Poly d = power();
        if (!d.is_constant())
          throw ParseError("division only by nonzero constants", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d.constant_value();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (peek() == '^') {
      std::size_t at = pos_;
      take();
      skip_ws();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a nonnegative integer literal", at);
      unsigned long e = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 1000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      take();
      Poly r = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return r;
    }
    if (c == 'p') {
      take();
      return Poly::var_p();
    }
    if (c == 'k') {
      take();
      return Poly::var_k();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      return Poly(Rational(mpz_class(digits)));
    }
    throw ParseError(std::string("unexpected character '") +
                         (c == '\0' ? std::string("<end>") : std::string(1, c)) +
                         "'",
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).run(); }

}  // namespace moduli
