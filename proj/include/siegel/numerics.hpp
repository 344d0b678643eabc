#pragma once

// Double-precision theta constants with characteristics on the Siegel upper
// half-space of genus 2, and evaluation of symbolic elements at sample points.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/chars.hpp"
#include "siegel/module.hpp"

namespace siegel {

using cplx = std::complex<double>;
using CVec2 = std::array<cplx, 2>;
using CVec3 = std::array<cplx, 3>;

// Z = [[z0, z1], [z1, z2]].
struct SiegelPoint {
  cplx z0, z1, z2;
  SiegelPoint scaled(double s) const { return {z0 * s, z1 * s, z2 * s}; }
  // Smallest eigenvalue of Im Z.
  double min_imag_eigenvalue() const;
  bool in_upper_half_space() const { return min_imag_eigenvalue() > 0; }
  std::string to_string() const;
};

struct EvalConfig {
  int radius = 10;
  double eps = 1e-12;
};

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Upper bound for the part of the theta series (or its k-th z-derivative) outside
// the max-norm box of the given radius.
double theta_tail_bound(const SiegelPoint& Z, int radius, int derivative_order = 0);

// theta[m](Z, z), summed over max-norm |g| <= radius.
cplx theta(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg = {}, CVec2 z = {});
// z-gradient of theta[m](Z, z) at z = 0.
CVec2 theta_grad(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg = {});
// Derivatives of theta[m](Z) in the coordinates (z0, z1, z2) of Z, with z1 the
// common off-diagonal entry (so d/dz1 hits both copies).
CVec3 theta_dZ(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg = {});
// f_a(Z) = theta[a; 0](2Z), a in 0..3 for (0,0), (0,1), (1,0), (1,1).
cplx theta_second(int a, const SiegelPoint& Z, const EvalConfig& cfg = {});
CVec3 theta_second_dZ(int a, const SiegelPoint& Z, const EvalConfig& cfg = {});
// Product of the ten even theta constants.
cplx chi5(const SiegelPoint& Z, const EvalConfig& cfg = {});

// Z = X + iY with X symmetric, entries uniform in [-1, 1], and Y = L L^T + I.
std::vector<SiegelPoint> sample_siegel(std::uint64_t seed, int count);

// All values needed to evaluate catalog elements at one point.
struct ThetaValues {
  SiegelPoint Z;
  std::array<cplx, 10> theta{};  // theta_1 .. theta_10
  std::array<CVec2, 6> grad{};   // grad_1 .. grad_6
  std::array<cplx, 4> second{};  // f_0 .. f_3
};
ThetaValues evaluate_thetas(const SiegelPoint& Z, const EvalConfig& cfg = {});

enum class Binding { FirstKind, SecondKind };

// A numerically evaluated identity: value vector plus the sum of the
// magnitudes of its individual terms, so that cancellation is measured.
struct Evaluation {
  std::vector<cplx> value;
  double scale = 0;
  double norm() const;
  double relative_residual() const { return scale > 0 ? norm() / scale : norm(); }
};

template <class F>
Evaluation eval_poly(const Poly<F>& p, std::span<const cplx> x) {
  return {{p.evaluate(x)}, p.term_magnitude(x)};
}

// Rank-6 elements stand for sum P_i grad_i (first kind); rank-1 elements are
// plain polynomials. A denominator tag is divided out numerically.
template <class F>
Evaluation eval_element(const ModuleElement<F>& e, const ThetaValues& tv, Binding binding = Binding::FirstKind) {
  std::span<const cplx> x = binding == Binding::FirstKind ? std::span<const cplx>(tv.theta)
                                                           : std::span<const cplx>(tv.second);
  if (static_cast<std::size_t>(e.nvars()) != x.size()) throw std::invalid_argument("binding variable count");
  Evaluation r;
  if (e.rank() == 1) {
    r = eval_poly(e[0], x);
  } else {
    if (binding != Binding::FirstKind || e.rank() != 6)
      throw std::invalid_argument("vector elements need rank 6 over the first-kind thetas");
    r.value.assign(2, 0);
    for (int i = 0; i < 6; ++i) {
      const cplx p = e[i].evaluate(x);
      const double mag = e[i].term_magnitude(x);
      for (int c = 0; c < 2; ++c) r.value[c] += p * tv.grad[i][c];
      r.scale += mag * std::hypot(std::abs(tv.grad[i][0]), std::abs(tv.grad[i][1]));
    }
  }
  if (const auto& den = e.denominator()) {
    cplx d = 1;
    double dmag = 1;
    for (int i = 0; i < e.nvars(); ++i)
      for (int k = den->exp(i); k > 0; --k) d *= x[i];
    dmag = std::abs(d);
    if (dmag < 1e-6 * std::max(1.0, r.scale)) throw std::domain_error("denominator too small at this point");
    for (auto& v : r.value) v /= d;
    r.scale /= dmag;
  }
  return r;
}

// Numerical checks for the modules over C[f_0..f_3].
struct WieberPoint {
  SiegelPoint Z;
  cplx detsyme_constant;  // det Jacobian(f1/f0, f2/f0, f3/f0) * f0^4 / chi5
  double bracket_residual = 0;
  double triple_relation_residual = 0;
  double jacobian_fd_error = 0;  // finite differences against termwise derivatives
};
struct WieberReport {
  std::vector<WieberPoint> points;
  cplx detsyme_mean;
  double detsyme_relative_spread = 0;  // std / |mean|
  double max_bracket_residual = 0;
  double max_triple_relation_residual = 0;
  double max_jacobian_fd_error = 0;
};
WieberReport wieber_checks(const std::vector<SiegelPoint>& points, const EvalConfig& cfg = {});

// The bracket {f, g} = g df - f dg in the coordinates (z0, z1, z2).
CVec3 bracket(cplx f, const CVec3& df, cplx g, const CVec3& dg);
// {f, g, h} = f^3 [[h2, -h1], [-h1, h0]] with d(g/f) ^ d(h/f) = h0 dz1^dz2 + h1 dz0^dz2 + h2 dz0^dz1;
// returned as the symmetric matrix entries (11, 12, 22).
CVec3 triple_bracket(cplx f, const CVec3& df, cplx g, const CVec3& dg, cplx h, const CVec3& dh);

}  // namespace siegel
