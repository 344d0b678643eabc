#pragma once

// Checks shared by the command-line tool and the acceptance run: numeric
// residuals of every catalog identity, the D-table certificate, exact slice
// dimensions of the Riemann quotient, and cross-field comparison of bases.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegel/numerics.hpp"
#include "siegel/thetaring.hpp"

namespace siegel {

std::vector<ThetaValues> sample_values(std::uint64_t seed, int count, const EvalConfig& cfg = {});

struct ResidualEntry {
  std::string label;
  double max_residual = 0;
};

template <class F>
ResidualEntry element_residual(const std::string& label, const ModuleElement<F>& e,
                               const std::vector<ThetaValues>& pts) {
  ResidualEntry r{label, 0};
  for (const auto& tv : pts) r.max_residual = std::max(r.max_residual, eval_element(e, tv).relative_residual());
  return r;
}

std::vector<ResidualEntry> riemann_residuals(const std::vector<ThetaValues>& pts);

template <class F>
std::vector<ResidualEntry> catalog_residuals(ThetaRing<F>& ring, const std::vector<ThetaValues>& pts) {
  std::vector<ResidualEntry> out;
  for (const auto& r : ring.all_relations()) out.push_back(element_residual(r.label(), r.element, pts));
  return out;
}

struct DTableCertificate {
  int i = 0, j = 0;
  int table_sign = 0;
  // det(grad_i, grad_j) / (pi^2 * theta product), averaged over the points
  cplx mean_ratio;
  double spread = 0;  // max |ratio - mean| over the points
  // sign s with det = s * (pi i)^2 * product, when the ratio is +-1 to tolerance
  std::optional<int> resolved_sign;
  bool agrees = false;  // resolved_sign == table_sign
};
std::vector<DTableCertificate> certify_dtable(const std::vector<ThetaValues>& pts, double tol = 1e-8);

// dim R_d for R = k[theta_1..theta_10] / (quartics), by Gaussian elimination on
// the degree-d slice of the ideal over GF(2^31 - 1).
std::int64_t riemann_slice_dimension(int d);

// One line per basis element, coefficients as small rationals where possible.
template <class F>
std::vector<std::string> basis_text(const GroebnerBasis<F>& gb) {
  std::vector<std::string> out;
  for (const auto& e : gb.elements()) out.push_back(to_string(e));
  return out;
}

// Text of every basis and series that must agree across coefficient fields.
template <class F>
std::map<std::string, std::vector<std::string>> fingerprints(ThetaRing<F>& ring, bool full) {
  std::map<std::string, std::vector<std::string>> fp;
  fp["riemann"] = basis_text(ring.riemann_basis());
  fp["reld"] = basis_text(ring.reld_basis());
  std::vector<std::string> rels;
  for (const auto& r : ring.all_relations()) rels.push_back(r.label() + " " + to_string(r.element));
  fp["relations"] = rels;
  fp["kernel"] = basis_text(ring.total_kernel());
  fp["kernel_series"] = {ring.relation_quotient_series().to_string()};
  if (full) {
    fp["chi5M"] = basis_text(ring.chi5_M());
    fp["chi5N"] = basis_text(ring.chi5_N());
    fp["series"] = {ring.module_series().to_string()};
    auto orbit = ring.orbit_extr_h().elements;
    std::sort(orbit.begin(), orbit.end());
    fp["orbit"] = orbit;
  }
  return fp;
}

struct WieberModuleReport {
  std::string name;
  std::size_t relations = 0;
  HilbertSeries series;
  std::vector<std::int64_t> dims;  // degrees 0..10
};
WieberModuleReport wieber_module_report(const WieberPresentation& p);

}  // namespace siegel
