#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/monomial.hpp"

namespace siegel {

// Integer polynomial in t; index k holds the coefficient of t^k.
using IntPoly = std::vector<std::int64_t>;

// t^shift * numerator(t) / (1 - t)^denominator_exponent.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(IntPoly numerator, int denominator_exponent, int shift = 0);

  const IntPoly& numerator() const { return num_; }
  int denominator_exponent() const { return den_; }
  int shift() const { return shift_; }

  // Cancels (1-t) factors and moves leading zero coefficients into the shift.
  HilbertSeries normalized() const;
  // Series coefficients for t^from ... t^to (inclusive).
  std::vector<std::int64_t> coefficients(int from, int to) const;
  std::int64_t coefficient(int d) const { return coefficients(d, d).front(); }

  HilbertSeries shifted(int k) const { return HilbertSeries(num_, den_, shift_ + k); }
  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  // Equality as rational functions.
  bool operator==(const HilbertSeries& o) const;

  // Numerator with the shift folded in, e.g. "60*t^9 - 60*t^8 + ... + 6*t".
  std::string numerator_string() const;
  std::string to_string() const;

 private:
  IntPoly num_{0};
  int den_ = 0;
  int shift_ = 0;
};

// Numerator N(t) with HS(k[x_1..x_n]/M) = N(t)/(1-t)^n for the monomial ideal M
// generated by `gens`, computed by pivot splitting.
IntPoly monomial_ideal_numerator(std::vector<Monomial> gens);

// Hilbert series of the free module quotient (+)_c k[x]/M_c (-shift_c), where
// M_c is generated by the lead monomials in component c.
HilbertSeries hilbert_series_from_leads(int nvars, const std::vector<int>& shifts,
                                        const std::vector<std::vector<Monomial>>& leads_per_comp);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b, std::int64_t scale = 1);

}  // namespace siegel
