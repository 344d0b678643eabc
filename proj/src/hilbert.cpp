#include "siegel/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace siegel {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert numerator overflow");
  return r;
}
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert numerator overflow");
  return r;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
}

bool is_zero(const IntPoly& p) {
  return std::all_of(p.begin(), p.end(), [](std::int64_t c) { return c == 0; });
}

// Keeps only minimal generators; drops duplicates.
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::grevlex(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

IntPoly one_minus_t_power(int d) {
  IntPoly p(d + 1, 0);
  p[0] += 1;
  p[d] -= 1;
  return p;
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};

  std::uint32_t seen = 0;
  bool pairwise_coprime = true;
  for (const auto& g : gens) {
    const std::uint32_t s = g.support();
    if (s & seen) {
      pairwise_coprime = false;
      break;
    }
    seen |= s;
  }
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = poly_mul(r, one_minus_t_power(g.degree()));
    return r;
  }

  // Pivot on the variable occurring in most generators that are not pure powers,
  // with the median exponent among those; such a pivot never lies in M.
  auto pure = [](const Monomial& g) { return std::has_single_bit(g.support()); };
  int best = -1, best_count = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exp(v) && !pure(g)) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  std::vector<int> exps;
  for (const auto& g : gens)
    if (!pure(g))
      if (int e = g.exp(best)) exps.push_back(e);
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  int e = exps[exps.size() / 2];
  const Monomial pivot = Monomial::variable(best, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, pivot));

  IntPoly a = numerator_rec(std::move(with_pivot));
  IntPoly b = numerator_rec(std::move(colon));
  IntPoly shifted(e, 0);
  shifted.insert(shifted.end(), b.begin(), b.end());
  return poly_add(a, shifted);
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b, std::int64_t scale) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], checked_mul(scale, b[i]));
  trim(r);
  return r;
}

IntPoly monomial_ideal_numerator(std::vector<Monomial> gens) { return numerator_rec(std::move(gens)); }

HilbertSeries hilbert_series_from_leads(int nvars, const std::vector<int>& shifts,
                                        const std::vector<std::vector<Monomial>>& leads_per_comp) {
  if (shifts.size() != leads_per_comp.size()) throw std::invalid_argument("rank mismatch");
  HilbertSeries total(IntPoly{0}, nvars, 0);
  for (std::size_t c = 0; c < shifts.size(); ++c)
    total = total + HilbertSeries(monomial_ideal_numerator(leads_per_comp[c]), nvars, shifts[c]);
  return total.normalized();
}

HilbertSeries::HilbertSeries(IntPoly numerator, int denominator_exponent, int shift)
    : num_(std::move(numerator)), den_(denominator_exponent), shift_(shift) {
  if (den_ < 0) throw std::invalid_argument("negative denominator exponent");
  trim(num_);
}

HilbertSeries HilbertSeries::normalized() const {
  if (is_zero(num_)) return HilbertSeries(IntPoly{0}, 0, 0);
  IntPoly n = num_;
  int d = den_;
  // divide by (1 - t) while N(1) == 0
  while (d > 0) {
    std::int64_t at_one = 0;
    for (auto c : n) at_one = checked_add(at_one, c);
    if (at_one != 0) break;
    // N(t) = (1 - t) Q(t): Q_k = sum_{i<=k} N_i
    IntPoly q(n.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      run = checked_add(run, n[k]);
      q[k] = run;
    }
    n = std::move(q);
    trim(n);
    --d;
  }
  int s = shift_;
  std::size_t lead_zeros = 0;
  while (lead_zeros + 1 < n.size() && n[lead_zeros] == 0) ++lead_zeros;
  n.erase(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
  s += static_cast<int>(lead_zeros);
  return HilbertSeries(std::move(n), d, s);
}

std::vector<std::int64_t> HilbertSeries::coefficients(int from, int to) const {
  std::vector<std::int64_t> out;
  for (int deg = from; deg <= to; ++deg) {
    // coefficient of t^(deg - shift) in N(t) * sum_k C(k + d - 1, d - 1) t^k
    const int target = deg - shift_;
    std::int64_t c = 0;
    for (int i = 0; i < static_cast<int>(num_.size()) && i <= target; ++i) {
      if (num_[i] == 0) continue;
      const int k = target - i;
      std::int64_t binom;
      if (den_ == 0) {
        binom = k == 0 ? 1 : 0;
      } else {
        // C(k + d - 1, d - 1)
        binom = 1;
        for (int j = 1; j < den_; ++j) binom = checked_mul(binom, k + j) / j;
      }
      c = checked_add(c, checked_mul(num_[i], binom));
    }
    out.push_back(target < 0 ? 0 : c);
  }
  return out;
}

namespace {
// Brings both series to the same denominator and shift.
void align(const HilbertSeries& a, const HilbertSeries& b, IntPoly& na, IntPoly& nb, int& d, int& s) {
  d = std::max(a.denominator_exponent(), b.denominator_exponent());
  s = std::min(a.shift(), b.shift());
  auto lift = [&](const HilbertSeries& h) {
    IntPoly n(h.shift() - s, 0);
    n.insert(n.end(), h.numerator().begin(), h.numerator().end());
    for (int i = h.denominator_exponent(); i < d; ++i) n = poly_mul(n, IntPoly{1, -1});
    return n;
  };
  na = lift(a);
  nb = lift(b);
}
}  // namespace

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  IntPoly na, nb;
  int d, s;
  align(*this, o, na, nb, d, s);
  return HilbertSeries(poly_add(na, nb), d, s);
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  IntPoly na, nb;
  int d, s;
  align(*this, o, na, nb, d, s);
  return HilbertSeries(poly_add(na, nb, -1), d, s);
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  const HilbertSeries a = normalized(), b = o.normalized();
  return a.num_ == b.num_ && a.den_ == b.den_ && (a.shift_ == b.shift_ || is_zero(a.num_));
}

std::string HilbertSeries::numerator_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(num_.size()) - 1; i >= 0; --i) {
    const std::int64_t c = num_[i];
    if (c == 0) continue;
    const int power = i + shift_;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (power == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (power != 1) os << "^" << power;
  }
  if (first) os << "0";
  return os.str();
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << "(" << numerator_string() << ")/(1-t)^" << den_;
  return os.str();
}

}  // namespace siegel
