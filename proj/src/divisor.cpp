#include "moduli/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace moduli {

char basis_char(BasisSym s) {
  switch (s) {
    case BasisSym::L: return 'L';
    case BasisSym::R: return 'R';
    case BasisSym::D: return 'D';
    case BasisSym::E: return 'E';
  }
  throw std::logic_error("basis_char: bad symbol");
}

BasisSym basis_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'L': return BasisSym::L;
    case 'R': return BasisSym::R;
    case 'D': return BasisSym::D;
    case 'E': return BasisSym::E;
  }
  throw std::invalid_argument(std::string("unknown basis symbol '") + c + "'");
}

Monomial3::Monomial3(BasisSym a, BasisSym b, BasisSym c) : syms{a, b, c} {
  std::sort(syms.begin(), syms.end());
}

std::string Monomial3::str() const {
  std::string s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += '.';
    s += basis_char(syms[i]);
  }
  return s;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r;
  for (const auto& [s, c] : coeffs_) r.coeffs_[s] = -c;
  return r;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r = a;
  for (const auto& [s, c] : b.coeffs_) r.set_coeff(s, r.coeff(s) + c);
  return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r = a;
  for (const auto& [s, c] : b.coeffs_) r.set_coeff(s, r.coeff(s) - c);
  return r;
}

DivisorClass operator*(const Poly& s, const DivisorClass& a) {
  DivisorClass r;
  for (const auto& [sym, c] : a.coeffs_) r.set_coeff(sym, s * c);
  return r;
}

std::string DivisorClass::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (BasisSym s : kBasis) {
    auto it = coeffs_.find(s);
    if (it == coeffs_.end()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ")*" + basis_char(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table loading
// ---------------------------------------------------------------------------
namespace {

std::vector<Monomial3> all_monomials() {
  std::vector<Monomial3> ms;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      for (std::size_t l = j; l < 4; ++l)
        ms.emplace_back(kBasis[i], kBasis[j], kBasis[l]);
  return ms;
}

}  // namespace

TrilinearForm TrilinearForm::load(std::istream& in) {
  struct Seen {
    Poly value;
    int line;
    int count;
  };
  std::map<Monomial3, Seen> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("table line " + std::to_string(lineno) +
                               ": expected 'A.B.C = <poly>'");
    std::string lhs = line.substr(0, eq);
    std::string rhs = line.substr(eq + 1);
    std::string syms;
    for (char c : lhs) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '.') continue;
      syms += c;
    }
    if (syms.size() != 3)
      throw std::runtime_error("table line " + std::to_string(lineno) +
                               ": monomial must have exactly 3 symbols");
    Monomial3 key(basis_from_char(syms[0]), basis_from_char(syms[1]),
                  basis_from_char(syms[2]));
    Poly value;
    try {
      value = Poly::parse(rhs);
    } catch (const ParseError& e) {
      throw std::runtime_error("table line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    if (value.deg_k() > 0)
      throw std::runtime_error("table line " + std::to_string(lineno) +
                               ": entries must be polynomials in p only");
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, Seen{value, lineno, 1});
    } else {
      // Cross-table overlap: a second occurrence must agree exactly.
      if (it->second.count >= 2)
        throw std::runtime_error("duplicate monomial " + key.str() +
                                 " (line " + std::to_string(lineno) + ")");
      if (!(it->second.value == value))
        throw std::runtime_error(
            "overlap inconsistency for " + key.str() + ": line " +
            std::to_string(it->second.line) + " gives " +
            it->second.value.str() + ", line " + std::to_string(lineno) +
            " gives " + value.str());
      it->second.count = 2;
    }
  }
  TrilinearForm form;
  for (const Monomial3& m : all_monomials()) {
    auto it = seen.find(m);
    if (it == seen.end())
      throw std::runtime_error("missing monomial " + m.str());
    form.entries_.emplace(m, it->second.value);
  }
  return form;
}

TrilinearForm TrilinearForm::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  return load(in);
}

const Poly& TrilinearForm::entry(const Monomial3& m) const {
  auto it = entries_.find(m);
  if (it == entries_.end())
    throw std::logic_error("TrilinearForm: missing entry " + m.str());
  return it->second;
}

std::string default_table_path() {
  if (const char* env = std::getenv("MODULI_TABLE_PATH")) return env;
  {
    std::ifstream probe("data/tables_hkw.txt");
    if (probe) return "data/tables_hkw.txt";
  }
#ifdef MODULI_SOURCE_TABLE_PATH
  return MODULI_SOURCE_TABLE_PATH;
#else
  return "tables_hkw.txt";
#endif
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

Poly triple_product(const DivisorClass& a, const DivisorClass& b,
                    const DivisorClass& c, const TrilinearForm& form) {
  Poly acc;
  for (BasisSym sa : kBasis) {
    Poly ca = a.coeff(sa);
    if (ca.is_zero()) continue;
    for (BasisSym sb : kBasis) {
      Poly cb = b.coeff(sb);
      if (cb.is_zero()) continue;
      for (BasisSym sc : kBasis) {
        Poly cc = c.coeff(sc);
        if (cc.is_zero()) continue;
        acc += ca * cb * cc * form.entry(sa, sb, sc);
      }
    }
  }
  return acc;
}

DivisorClass canonical_class() {
  DivisorClass k;
  k.set_coeff(BasisSym::L, Poly(3));
  k.set_coeff(BasisSym::D, Poly(-1));
  k.set_coeff(BasisSym::R, Poly(Rational(-1, 2)));
  k.set_coeff(BasisSym::E, Poly(Rational(-1, 2)));
  return k;
}

Poly k_cubed(const TrilinearForm& form) {
  DivisorClass k = canonical_class();
  return triple_product(k, k, k, form);
}

Poly rr_cubic(const TrilinearForm& form) {
  DivisorClass kld;  // kL - D
  kld.set_coeff(BasisSym::L, Poly::var_k());
  kld.set_coeff(BasisSym::D, Poly(-1));
  DivisorClass k = canonical_class();
  DivisorClass second = kld - k;
  DivisorClass third = Poly(2) * kld - k;
  return triple_product(kld, second, third, form) / Rational(12);
}

}  // namespace moduli
