#include "moduli/divisor_expr.hpp"

#include <cctype>
#include <variant>

namespace moduli {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  DivisorExprPtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
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

  bool match_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  DivisorExprPtr expr() {
    auto sum = std::make_shared<DivisorExpr>();
    sum->kind = DivisorExpr::Kind::Sum;
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      sign = (c == '-') ? -1 : 1;
    }
    sum->args.push_back(addend());
    sum->arg_signs.push_back(sign);
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      sum->args.push_back(addend());
      sum->arg_signs.push_back(c == '-' ? -1 : 1);
    }
    if (sum->args.size() == 1 && sum->arg_signs[0] == 1) return sum->args[0];
    return sum;
  }

  DivisorExprPtr addend() {
    char c = peek();
    if (c == 'p' && match_word("prod")) {
      if (peek() != '(') throw ParseError("expected '(' after prod", pos_);
      ++pos_;
      auto prod = std::make_shared<DivisorExpr>();
      prod->kind = DivisorExpr::Kind::Prod;
      prod->args.push_back(expr());
      while (peek() == ',') {
        ++pos_;
        prod->args.push_back(expr());
      }
      if (peek() != ')') throw ParseError("expected ')' in prod", pos_);
      ++pos_;
      return prod;
    }
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      if (peek() == '^') {
        std::size_t at = pos_;
        ++pos_;
        skip_ws();
        unsigned e = 0;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected integer exponent", at);
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
        auto pw = std::make_shared<DivisorExpr>();
        pw->kind = DivisorExpr::Kind::Pow;
        pw->args.push_back(inner);
        pw->exponent = e;
        return pw;
      }
      return inner;
    }
    // [rational] symbol, with implicit multiplication ("3L", "1/2 R", "L").
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = rational_literal();
      if (peek() == '*') ++pos_;
    }
    char s = peek();
    std::size_t at = pos_;
    try {
      BasisSym sym = basis_from_char(s);
      // Reject lower-case letters that are not basis symbols in this DSL;
      // upper/lower both accepted for L, R, D, E.
      ++pos_;
      auto lin = std::make_shared<DivisorExpr>();
      lin->kind = DivisorExpr::Kind::Linear;
      lin->linear.set_coeff(sym, Poly(coeff));
      return lin;
    } catch (const std::invalid_argument&) {
      throw ParseError("expected basis symbol L, R, D or E", at);
    }
  }

  Rational rational_literal() {
    mpz_class num = integer_literal();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        mpz_class den = integer_literal();
        if (den == 0) throw ParseError("division by zero", save);
        return Rational(num, den);
      }
      pos_ = save;  // the '/' was not part of a fraction
    }
    return Rational(num);
  }

  mpz_class integer_literal() {
    skip_ws();
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    if (digits.empty()) throw ParseError("expected integer", pos_);
    return mpz_class(digits);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Evaluation result: a linear class or a degree-3 number (Poly).
using EvalValue = std::variant<DivisorClass, Poly>;

EvalValue evaluate(const DivisorExpr& e, const TrilinearForm& form) {
  switch (e.kind) {
    case DivisorExpr::Kind::Linear:
      return e.linear;
    case DivisorExpr::Kind::Sum: {
      EvalValue acc = evaluate(*e.args[0], form);
      if (e.arg_signs[0] == -1) {
        if (std::holds_alternative<DivisorClass>(acc))
          acc = -std::get<DivisorClass>(acc);
        else
          acc = -std::get<Poly>(acc);
      }
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        EvalValue next = evaluate(*e.args[i], form);
        if (acc.index() != next.index())
          throw DegreeError("cannot add classes of different degree");
        if (std::holds_alternative<DivisorClass>(acc)) {
          auto& a = std::get<DivisorClass>(acc);
          const auto& b = std::get<DivisorClass>(next);
          acc = (e.arg_signs[i] == -1) ? a - b : a + b;
        } else {
          auto& a = std::get<Poly>(acc);
          const auto& b = std::get<Poly>(next);
          acc = (e.arg_signs[i] == -1) ? a - b : a + b;
        }
      }
      return acc;
    }
    case DivisorExpr::Kind::Pow: {
      if (e.exponent != 3) throw DegreeError("degree must be 3");
      EvalValue base = evaluate(*e.args[0], form);
      if (!std::holds_alternative<DivisorClass>(base))
        throw DegreeError("degree must be 3");
      const auto& b = std::get<DivisorClass>(base);
      return triple_product(b, b, b, form);
    }
    case DivisorExpr::Kind::Prod: {
      if (e.args.size() != 3) throw DegreeError("degree must be 3");
      std::array<DivisorClass, 3> fs;
      for (std::size_t i = 0; i < 3; ++i) {
        EvalValue v = evaluate(*e.args[i], form);
        if (!std::holds_alternative<DivisorClass>(v))
          throw DegreeError("degree must be 3");
        fs[i] = std::get<DivisorClass>(v);
      }
      return triple_product(fs[0], fs[1], fs[2], form);
    }
  }
  throw std::logic_error("evaluate: bad expression kind");
}

}  // namespace

DivisorExprPtr parse_divisor_expr(std::string_view text) {
  return ExprParser(text).run();
}

Poly evaluate_product(const DivisorExpr& expr, const TrilinearForm& form) {
  EvalValue v = evaluate(expr, form);
  if (!std::holds_alternative<Poly>(v)) throw DegreeError("degree must be 3");
  return std::get<Poly>(v);
}

}  // namespace moduli
