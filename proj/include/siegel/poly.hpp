#pragma once

// Sparse multivariate polynomials over a coefficient field, terms kept sorted
// in descending graded-reverse-lex order with no stored zero coefficients.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siegel/field.hpp"
#include "siegel/monomial.hpp"

namespace siegel {

template <class F>
struct PolyTerm {
  Monomial mono;
  F coef;
  bool operator==(const PolyTerm&) const = default;
};

template <class F>
class Poly {
 public:
  using Field = F;
  using Term = PolyTerm<F>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }
  Poly(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    check_nvars(nvars);
    normalize();
  }

  static Poly constant(int nvars, F c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Poly monomial(int nvars, const Monomial& m, F c = F::one()) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Poly variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    return monomial(nvars, Monomial::variable(i));
  }

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }

  // Maximal total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == degree(); });
  }

  Poly operator+(const Poly& o) const { return combine(o, F::one()); }
  Poly operator-(const Poly& o) const { return combine(o, -F::one()); }
  Poly operator-() const { return scaled(-F::one()); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(nvars_);
    std::unordered_map<Monomial, F, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.push_back({m, std::move(c)});
    Poly r(nvars_);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const F& c) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = t.coef * c;
    return r;
  }
  Poly times_monomial(const Monomial& m, const F& c = F::one()) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;  // multiplication by a monomial preserves the order
  }
  Poly pow(int e) const {
    Poly r = constant(nvars_, F::one());
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  bool divisible_by(const Monomial& m) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return m.divides(t.mono); });
  }
  // Requires divisible_by(m).
  Poly divided_by(const Monomial& m) const {
    if (!divisible_by(m)) throw std::domain_error("polynomial not divisible by monomial");
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono / m, t.coef});
    return r;
  }

  // Substitutes x_i -> x_{perm[i]}.
  Poly permuted(std::span<const int> perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < nvars_; ++i)
        if (int e = t.mono.exp(i)) m.set(perm[i], e);
      out.push_back({m, t.coef});
    }
    return Poly(nvars_, std::move(out));
  }

  // Evaluation at a complex point; coefficients are lifted to rationals first.
  std::complex<double> evaluate(std::span<const std::complex<double>> x) const {
    std::complex<double> s = 0;
    for (const auto& t : terms_) {
      std::complex<double> v = coef_to_double(t.coef);
      for (int i = 0; i < nvars_; ++i)
        for (int e = t.mono.exp(i); e > 0; --e) v *= x[i];
      s += v;
    }
    return s;
  }
  // Sum of the magnitudes of the individual terms at x (residual normalizer).
  double term_magnitude(std::span<const std::complex<double>> x) const {
    double s = 0;
    for (const auto& t : terms_) {
      double v = std::abs(coef_to_double(t.coef));
      for (int i = 0; i < nvars_; ++i)
        for (int e = t.mono.exp(i); e > 0; --e) v *= std::abs(x[i]);
      s += v;
    }
    return s;
  }

  static double coef_to_double(const F& c) {
    auto q = c.lift();
    if (!q) throw std::domain_error("coefficient has no small rational lift");
    return q->get_d();
  }

  template <class G>
  Poly<G> convert() const {
    std::vector<PolyTerm<G>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto q = t.coef.lift();
      if (!q) throw std::domain_error("coefficient has no small rational lift");
      out.push_back({t.mono, G::from_rational(*q)});
    }
    return Poly<G>(nvars_, std::move(out));
  }

  // Leading coefficient made one.
  Poly monic() const { return is_zero() ? *this : scaled(lead().coef.inv()); }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  static void check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  }
  void check_same(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
  }
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return Monomial::grevlex(a.mono, b.mono) > 0;
    });
  }
  void normalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef += t.coef;
        continue;
      }
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }
  Poly combine(const Poly& o, const F& sign) const {
    check_same(o);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size())
        c = -1;
      else if (j == o.terms_.size())
        c = 1;
      else
        c = Monomial::grevlex(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({o.terms_[j].mono, o.terms_[j].coef * sign});
        ++j;
      } else {
        F s = terms_[i].coef + o.terms_[j].coef * sign;
        if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Number of monomials of degree d in k variables: C(d+k-1, k-1).
std::uint64_t graded_dimension(int k, int d);

}  // namespace siegel
