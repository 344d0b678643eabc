#pragma once

// Text format for polynomials and module elements:
//   -t1^2*t3 + 3/2*t4*t10 - 7
// Variables are a prefix plus an index (t1..t10 start at 1, f0..f3 at 0).
// Prime-field coefficients without a small rational lift print as [v].
// Module elements print as "{p_1; p_2; ...}" and may end with " / m" for a
// denominator tag.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "siegel/module.hpp"

namespace siegel {

struct VarNames {
  std::string prefix = "t";
  int base = 1;
  static VarNames theta() { return {"t", 1}; }
  static VarNames second_kind() { return {"f", 0}; }
};

inline std::string monomial_to_string(const Monomial& m, int nvars, const VarNames& names) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    const int e = m.exp(i);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += names.prefix + std::to_string(i + names.base);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

template <class F>
std::string to_string(const Poly<F>& p, const VarNames& names = VarNames::theta()) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = t.coef.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const bool unit = c == "1";
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (!unit) out += c + "*";
      out += monomial_to_string(t.mono, p.nvars(), names);
    }
  }
  return out;
}

template <class F>
std::string to_string(const ModuleElement<F>& e, const VarNames& names = VarNames::theta()) {
  std::string s = "{";
  for (int i = 0; i < e.rank(); ++i) {
    if (i) s += "; ";
    s += to_string(e[i], names);
  }
  s += "}";
  if (e.denominator()) s += " / " + monomial_to_string(*e.denominator(), e.nvars(), names);
  return s;
}

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected a number");
    std::string d(s_.substr(i_, j - i_));
    i_ = j;
    return d;
  }
  std::string ident() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
    std::string d(s_.substr(i_, j - i_));
    i_ = j;
    return d;
  }
  std::size_t pos() const { return i_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(i_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

template <class F>
F parse_coefficient(Lexer& lx) {
  if (lx.eat('[')) {
    if constexpr (F::kExact) lx.fail("bracketed residue in a rational coefficient");
    const std::string v = lx.digits();
    lx.expect(']');
    return F::from_int(std::stoll(v));
  }
  mpz_class num(lx.digits());
  mpz_class den(1);
  if (lx.eat('/')) den = mpz_class(lx.digits());
  if (den == 0) lx.fail("zero denominator");
  return F::from_rational(mpq_class(num, den));
}

inline Monomial parse_factor(Lexer& lx, int nvars, const VarNames& names, Monomial m) {
  const std::string id = lx.ident();
  if (id != names.prefix) lx.fail("unknown variable prefix '" + id + "'");
  const int idx = std::stoi(lx.digits()) - names.base;
  if (idx < 0 || idx >= nvars) lx.fail("variable index out of range");
  int e = 1;
  if (lx.eat('^')) e = std::stoi(lx.digits());
  m.set(idx, m.exp(idx) + e);
  return m;
}

template <class F>
Poly<F> parse_poly(Lexer& lx, int nvars, const VarNames& names) {
  std::vector<PolyTerm<F>> terms;
  bool first = true;
  for (;;) {
    const char c = lx.peek();
    if (c == '\0' || c == ';' || c == '}' || c == ',') break;
    bool neg = false;
    if (lx.eat('-'))
      neg = true;
    else if (!lx.eat('+') && !first)
      lx.fail("expected '+' or '-'");
    first = false;
    F coef = F::one();
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(lx.peek())) || lx.peek() == '[') {
      coef = parse_coefficient<F>(lx);
      need_factor = lx.eat('*');
    }
    if (need_factor) {
      m = parse_factor(lx, nvars, names, m);
      while (lx.eat('*')) m = parse_factor(lx, nvars, names, m);
    }
    terms.push_back({m, neg ? -coef : coef});
  }
  if (first) lx.fail("empty polynomial");
  Poly<F> p(nvars, std::move(terms));
  return p;
}

}  // namespace detail

template <class F>
Poly<F> parse_poly(std::string_view text, int nvars, const VarNames& names = VarNames::theta()) {
  detail::Lexer lx(text);
  auto p = detail::parse_poly<F>(lx, nvars, names);
  if (!lx.done()) lx.fail("trailing input");
  return p;
}

template <class F>
ModuleElement<F> parse_element(std::string_view text, int nvars, const std::vector<int>& shifts,
                               const VarNames& names = VarNames::theta()) {
  detail::Lexer lx(text);
  lx.expect('{');
  ModuleElement<F> e(nvars, shifts);
  for (int i = 0; i < static_cast<int>(shifts.size()); ++i) {
    if (i) lx.expect(';');
    e.set(i, detail::parse_poly<F>(lx, nvars, names));
  }
  lx.expect('}');
  if (lx.eat('/')) {
    Monomial m = detail::parse_factor(lx, nvars, names, Monomial());
    while (lx.eat('*')) m = detail::parse_factor(lx, nvars, names, m);
    e = e.with_denominator(m);
  }
  if (!lx.done()) lx.fail("trailing input");
  return e;
}

}  // namespace siegel
