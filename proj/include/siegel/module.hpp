#pragma once

// Elements of graded free modules F = (+)_i R(-shift_i) over a polynomial ring,
// optionally carrying a monomial denominator for formal quotients.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "siegel/poly.hpp"

namespace siegel {

template <class F>
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(int nvars, std::vector<int> shifts)
      : nvars_(nvars), shifts_(std::move(shifts)), comps_(shifts_.size(), Poly<F>(nvars)) {}

  static ModuleElement unit(int nvars, std::vector<int> shifts, int i, Poly<F> coef) {
    ModuleElement e(nvars, std::move(shifts));
    e.set(i, std::move(coef));
    return e;
  }

  int nvars() const { return nvars_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  const std::vector<int>& shifts() const { return shifts_; }
  const Poly<F>& operator[](int i) const { return comps_.at(i); }
  const std::vector<Poly<F>>& components() const { return comps_; }
  void set(int i, Poly<F> p) {
    if (p.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch");
    comps_.at(i) = std::move(p);
  }
  const std::optional<Monomial>& denominator() const { return den_; }

  bool is_zero() const {
    for (const auto& p : comps_)
      if (!p.is_zero()) return false;
    return true;
  }
  // Shifted degree of the numerator minus the denominator degree; nullopt for zero.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (int i = 0; i < rank(); ++i)
      if (!comps_[i].is_zero()) {
        const int di = comps_[i].degree() + shifts_[i];
        if (!d || di > *d) d = di;
      }
    if (d && den_) *d -= den_->degree();
    return d;
  }
  bool is_homogeneous() const {
    auto d = degree();
    if (!d) return true;
    const int offset = den_ ? den_->degree() : 0;
    for (int i = 0; i < rank(); ++i) {
      const auto& p = comps_[i];
      for (const auto& t : p.terms())
        if (t.mono.degree() + shifts_[i] - offset != *d) return false;
    }
    return true;
  }

  ModuleElement operator+(const ModuleElement& o) const { return combine(o, false); }
  ModuleElement operator-(const ModuleElement& o) const { return combine(o, true); }
  ModuleElement scaled(const Poly<F>& p) const {
    ModuleElement r = *this;
    for (auto& c : r.comps_) c = c * p;
    return r;
  }
  ModuleElement scaled(const F& c) const {
    ModuleElement r = *this;
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
  }

  // Formal division by a monomial: cancels whatever common monomial factor the
  // numerator shares with the accumulated denominator, keeps the rest as a tag.
  ModuleElement monomial_divide(const Monomial& m) const {
    ModuleElement r = *this;
    if (r.is_zero()) {
      r.den_.reset();
      return r;
    }
    Monomial total = den_ ? *den_ * m : m;
    Monomial g = total;
    for (const auto& p : r.comps_)
      for (const auto& t : p.terms()) g = Monomial::gcd(g, t.mono);
    for (auto& p : r.comps_) p = p.divided_by(g);
    Monomial rest = total / g;
    if (rest.is_one())
      r.den_.reset();
    else
      r.den_ = rest;
    return r;
  }
  // Numerator with the denominator dropped.
  ModuleElement numerator() const {
    ModuleElement r = *this;
    r.den_.reset();
    return r;
  }

  // Relabels variables x_i -> x_{var_perm[i]} and generators e_i -> e_{comp_perm[i]}.
  ModuleElement permuted(std::span<const int> var_perm, std::span<const int> comp_perm) const {
    ModuleElement r(nvars_, shifts_);
    for (int i = 0; i < rank(); ++i) r.comps_[comp_perm[i]] = comps_[i].permuted(var_perm);
    if (den_) {
      Monomial d;
      for (int i = 0; i < nvars_; ++i)
        if (int e = den_->exp(i)) d.set(var_perm[i], e);
      r.den_ = d;
    }
    return r;
  }

  template <class G>
  ModuleElement<G> convert() const {
    ModuleElement<G> r(nvars_, shifts_);
    for (int i = 0; i < rank(); ++i) r.set(i, comps_[i].template convert<G>());
    if (den_) r = r.with_denominator(*den_);
    return r;
  }
  ModuleElement with_denominator(std::optional<Monomial> d) const {
    ModuleElement r = *this;
    r.den_ = d;
    return r;
  }

  bool operator==(const ModuleElement& o) const {
    return nvars_ == o.nvars_ && shifts_ == o.shifts_ && comps_ == o.comps_ && den_ == o.den_;
  }

 private:
  ModuleElement combine(const ModuleElement& o, bool subtract) const {
    if (shifts_ != o.shifts_ || nvars_ != o.nvars_)
      throw std::invalid_argument("module elements live in different free modules");
    if (den_ != o.den_) throw std::invalid_argument("denominator mismatch");
    ModuleElement r = *this;
    for (int i = 0; i < rank(); ++i)
      r.comps_[i] = subtract ? comps_[i] - o.comps_[i] : comps_[i] + o.comps_[i];
    return r;
  }

  int nvars_ = 0;
  std::vector<int> shifts_;
  std::vector<Poly<F>> comps_;
  std::optional<Monomial> den_;
};

}  // namespace siegel
