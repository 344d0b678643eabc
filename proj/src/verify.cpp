#include "siegel/verify.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace siegel {

std::vector<ThetaValues> sample_values(std::uint64_t seed, int count, const EvalConfig& cfg) {
  std::vector<ThetaValues> out;
  for (const auto& Z : sample_siegel(seed, count)) out.push_back(evaluate_thetas(Z, cfg));
  return out;
}

std::vector<ResidualEntry> riemann_residuals(const std::vector<ThetaValues>& pts) {
  std::vector<ResidualEntry> out;
  const auto quartics = riemann_ideal<Rational>();
  for (std::size_t k = 0; k < quartics.size(); ++k) {
    ResidualEntry r{"R" + std::to_string(k + 1), 0};
    for (const auto& tv : pts)
      r.max_residual = std::max(r.max_residual, eval_poly(quartics[k], std::span<const cplx>(tv.theta)).relative_residual());
    out.push_back(r);
  }
  return out;
}

std::vector<DTableCertificate> certify_dtable(const std::vector<ThetaValues>& pts, double tol) {
  constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
  std::vector<DTableCertificate> out;
  for (const auto& e : d_table()) {
    DTableCertificate c;
    c.i = e.i;
    c.j = e.j;
    c.table_sign = e.sign;
    std::vector<cplx> ratios;
    for (const auto& tv : pts) {
      const auto &gi = tv.grad[e.i - 1], &gj = tv.grad[e.j - 1];
      cplx prod = 1;
      for (int k : e.quad) prod *= tv.theta[k - 1];
      ratios.push_back((gi[0] * gj[1] - gi[1] * gj[0]) / (kPi2 * prod));
    }
    for (auto r : ratios) c.mean_ratio += r;
    c.mean_ratio /= static_cast<double>(ratios.size());
    for (auto r : ratios) c.spread = std::max(c.spread, std::abs(r - c.mean_ratio));
    // (pi i)^2 = -pi^2
    for (int s : {1, -1})
      if (c.spread < tol && std::abs(c.mean_ratio + static_cast<double>(s)) < tol) c.resolved_sign = s;
    c.agrees = c.resolved_sign && *c.resolved_sign == e.sign;
    out.push_back(c);
  }
  return out;
}

namespace {

void monomials_of_degree(int nvars, int d, int var, Monomial cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, d);
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    Monomial m = cur;
    m.set(var, e);
    monomials_of_degree(nvars, d - e, var + 1, m, out);
  }
}

}  // namespace

std::int64_t riemann_slice_dimension(int d) {
  if (d < 0) return 0;
  const std::int64_t total = graded_dimension(kThetaVars, d);
  if (d < 4) return total;
  std::vector<Monomial> all, mult;
  monomials_of_degree(kThetaVars, d, 0, Monomial(), all);
  monomials_of_degree(kThetaVars, d - 4, 0, Monomial(), mult);
  std::unordered_map<Monomial, int, MonomialHash> col;
  for (std::size_t k = 0; k < all.size(); ++k) col.emplace(all[k], static_cast<int>(k));

  using Row = std::map<int, GF1>;
  std::map<int, Row> pivots;  // lead column -> row with leading entry 1
  for (const auto& q : riemann_ideal<GF1>())
    for (const auto& m : mult) {
      Row row;
      for (const auto& t : q.terms()) row[col.at(t.mono * m)] = t.coef;
      while (!row.empty()) {
        auto it = pivots.find(row.begin()->first);
        if (it == pivots.end()) break;
        const GF1 f = row.begin()->second;
        for (const auto& [c, v] : it->second) {
          auto& x = row[c];
          x = x - f * v;
          if (x.is_zero()) row.erase(c);
        }
      }
      if (row.empty()) continue;
      const GF1 inv = row.begin()->second.inv();
      for (auto& [c, v] : row) v = v * inv;
      pivots.emplace(row.begin()->first, std::move(row));
    }
  return total - static_cast<std::int64_t>(pivots.size());
}

WieberModuleReport wieber_module_report(const WieberPresentation& p) {
  WieberModuleReport r;
  r.name = p.name;
  r.relations = p.relations.size();
  r.series = hilbert_series(wieber_basis<Rational>(p)).normalized();
  r.dims = r.series.coefficients(0, 10);
  return r;
}

}  // namespace siegel
