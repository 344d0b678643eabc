#include "siegel/numerics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace siegel {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0, 1);

// Terms exp(pi i (Z[v] + 2 v^T (z + b/2))), v = g + a/2, with optional
// polynomial weights in v for derivatives.
template <class Weight>
auto theta_sum(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg, CVec2 z, Weight&& weight) {
  const double a0 = m.a(0) / 2.0, a1 = m.a(1) / 2.0;
  const double b0 = m.b(0) / 2.0, b1 = m.b(1) / 2.0;
  using R = decltype(weight(0.0, 0.0, cplx()));
  R acc{};
  const int G = cfg.radius;
  for (int g0 = -G; g0 <= G; ++g0)
    for (int g1 = -G; g1 <= G; ++g1) {
      const double v0 = g0 + a0, v1 = g1 + a1;
      const cplx q = Z.z0 * (v0 * v0) + 2.0 * Z.z1 * (v0 * v1) + Z.z2 * (v1 * v1) +
                     2.0 * (v0 * (z[0] + b0) + v1 * (z[1] + b1));
      const cplx e = std::exp(kI * kPi * q);
      const R w = weight(v0, v1, e);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w[k];
    }
  return acc;
}

void check_truncation(const SiegelPoint& Z, const EvalConfig& cfg, int order) {
  if (cfg.radius < 1 || !(cfg.eps > 0)) throw std::invalid_argument("radius must be >= 1 and eps > 0");
  if (!Z.in_upper_half_space()) throw std::domain_error("Im Z is not positive definite");
  const double tail = theta_tail_bound(Z, cfg.radius, order);
  if (tail > cfg.eps) {
    std::ostringstream os;
    os << "theta tail bound " << tail << " exceeds eps " << cfg.eps << " at radius " << cfg.radius;
    throw TruncationError(os.str());
  }
}

}  // namespace

double SiegelPoint::min_imag_eigenvalue() const {
  const double a = z0.imag(), b = z1.imag(), c = z2.imag();
  const double mean = (a + c) / 2, d = std::sqrt((a - c) * (a - c) / 4 + b * b);
  return mean - d;
}

std::string SiegelPoint::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[[" << z0.real() << "+" << z0.imag() << "i, " << z1.real() << "+" << z1.imag() << "i], [.., "
     << z2.real() << "+" << z2.imag() << "i]]";
  return os.str();
}

double theta_tail_bound(const SiegelPoint& Z, int radius, int derivative_order) {
  const double lambda = Z.min_imag_eigenvalue();
  if (!(lambda > 0)) return INFINITY;
  // shell k (max norm) has 8k lattice points, each with |v| >= k - 1/2
  double sum = 0;
  for (int k = radius + 1; k < radius + 200; ++k) {
    const double r = k - 0.5;
    double term = 8.0 * k * std::exp(-kPi * lambda * r * r);
    for (int d = 0; d < derivative_order; ++d) term *= 2 * kPi * (k + 0.5);
    sum += term;
    if (term < 1e-300) break;
  }
  return sum;
}

cplx theta(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg, CVec2 z) {
  check_truncation(Z, cfg, 0);
  auto r = theta_sum(m, Z, cfg, z, [](double, double, cplx e) { return std::array<cplx, 1>{e}; });
  return r[0];
}

CVec2 theta_grad(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg) {
  check_truncation(Z, cfg, 1);
  return theta_sum(m, Z, cfg, {}, [](double v0, double v1, cplx e) {
    return CVec2{2.0 * kPi * kI * v0 * e, 2.0 * kPi * kI * v1 * e};
  });
}

CVec3 theta_dZ(Characteristic m, const SiegelPoint& Z, const EvalConfig& cfg) {
  check_truncation(Z, cfg, 2);
  return theta_sum(m, Z, cfg, {}, [](double v0, double v1, cplx e) {
    return CVec3{kPi * kI * v0 * v0 * e, 2.0 * kPi * kI * v0 * v1 * e, kPi * kI * v1 * v1 * e};
  });
}

namespace {
Characteristic second_kind_char(int a) {
  if (a < 0 || a > 3) throw std::out_of_range("second-kind index must be 0..3");
  return Characteristic(a >> 1 & 1, a & 1, 0, 0);
}
}  // namespace

cplx theta_second(int a, const SiegelPoint& Z, const EvalConfig& cfg) {
  return theta(second_kind_char(a), Z.scaled(2), cfg);
}

CVec3 theta_second_dZ(int a, const SiegelPoint& Z, const EvalConfig& cfg) {
  CVec3 d = theta_dZ(second_kind_char(a), Z.scaled(2), cfg);
  for (auto& x : d) x *= 2.0;
  return d;
}

cplx chi5(const SiegelPoint& Z, const EvalConfig& cfg) {
  cplx p = 1;
  for (const auto& m : even_characteristics()) p *= theta(m, Z, cfg);
  return p;
}

std::vector<SiegelPoint> sample_siegel(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<SiegelPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double x0 = u(rng), x1 = u(rng), x2 = u(rng);
    const double l00 = u(rng), l01 = u(rng), l10 = u(rng), l11 = u(rng);
    // Y = L L^T + I
    const double y0 = l00 * l00 + l01 * l01 + 1;
    const double y1 = l00 * l10 + l01 * l11;
    const double y2 = l10 * l10 + l11 * l11 + 1;
    out.push_back({cplx(x0, y0), cplx(x1, y1), cplx(x2, y2)});
  }
  return out;
}

ThetaValues evaluate_thetas(const SiegelPoint& Z, const EvalConfig& cfg) {
  ThetaValues tv;
  tv.Z = Z;
  for (int i = 0; i < 10; ++i) tv.theta[i] = theta(even_characteristics()[i], Z, cfg);
  for (int i = 0; i < 6; ++i) tv.grad[i] = theta_grad(odd_characteristics()[i], Z, cfg);
  for (int a = 0; a < 4; ++a) tv.second[a] = theta_second(a, Z, cfg);
  return tv;
}

double Evaluation::norm() const {
  double s = 0;
  for (const auto& v : value) s += std::norm(v);
  return std::sqrt(s);
}

CVec3 bracket(cplx f, const CVec3& df, cplx g, const CVec3& dg) {
  CVec3 r;
  for (int k = 0; k < 3; ++k) r[k] = g * df[k] - f * dg[k];
  return r;
}

CVec3 triple_bracket(cplx f, const CVec3& df, cplx g, const CVec3& dg, cplx h, const CVec3& dh) {
  CVec3 u, w;
  for (int k = 0; k < 3; ++k) {
    u[k] = (f * dg[k] - g * df[k]) / (f * f);
    w[k] = (f * dh[k] - h * df[k]) / (f * f);
  }
  const cplx h0 = u[1] * w[2] - u[2] * w[1];
  const cplx h1 = u[0] * w[2] - u[2] * w[0];
  const cplx h2 = u[0] * w[1] - u[1] * w[0];
  const cplx f3 = f * f * f;
  return {f3 * h2, -f3 * h1, f3 * h0};
}

namespace {

cplx det3(const std::array<CVec3, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

SiegelPoint moved(const SiegelPoint& Z, int coord, double h) {
  SiegelPoint p = Z;
  (coord == 0 ? p.z0 : coord == 1 ? p.z1 : p.z2) += h;
  return p;
}

// Jacobian of (f1/f0, f2/f0, f3/f0) by central differences with one Richardson step.
std::array<CVec3, 3> quotient_jacobian_fd(const SiegelPoint& Z, const EvalConfig& cfg, double h) {
  auto quotients = [&](const SiegelPoint& p) {
    const cplx f0 = theta_second(0, p, cfg);
    return CVec3{theta_second(1, p, cfg) / f0, theta_second(2, p, cfg) / f0, theta_second(3, p, cfg) / f0};
  };
  std::array<CVec3, 3> J{};
  for (int c = 0; c < 3; ++c) {
    auto central = [&](double step) {
      const CVec3 a = quotients(moved(Z, c, step)), b = quotients(moved(Z, c, -step));
      CVec3 d;
      for (int k = 0; k < 3; ++k) d[k] = (a[k] - b[k]) / (2 * step);
      return d;
    };
    const CVec3 d1 = central(h), d2 = central(h / 2);
    for (int k = 0; k < 3; ++k) J[k][c] = (4.0 * d2[k] - d1[k]) / 3.0;
  }
  return J;
}

double spread(const std::vector<cplx>& xs, cplx& mean) {
  mean = 0;
  for (auto x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0;
  for (auto x : xs) var += std::norm(x - mean);
  var /= static_cast<double>(xs.size());
  return std::abs(mean) > 0 ? std::sqrt(var) / std::abs(mean) : INFINITY;
}

}  // namespace

WieberReport wieber_checks(const std::vector<SiegelPoint>& points, const EvalConfig& cfg) {
  WieberReport rep;
  std::vector<cplx> consts;
  for (const auto& Z : points) {
    WieberPoint wp;
    wp.Z = Z;
    std::array<cplx, 4> f;
    std::array<CVec3, 4> df;
    for (int a = 0; a < 4; ++a) {
      f[a] = theta_second(a, Z, cfg);
      df[a] = theta_second_dZ(a, Z, cfg);
    }
    const cplx x5 = chi5(Z, cfg);

    const auto J = quotient_jacobian_fd(Z, cfg, 1e-3);
    // termwise Jacobian for comparison
    double fd_err = 0, fd_scale = 0;
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 3; ++c) {
        const cplx exact = (f[0] * df[k + 1][c] - f[k + 1] * df[0][c]) / (f[0] * f[0]);
        fd_err = std::max(fd_err, std::abs(J[k][c] - exact));
        fd_scale = std::max(fd_scale, std::abs(exact));
      }
    wp.jacobian_fd_error = fd_err / fd_scale;
    wp.detsyme_constant = det3(J) * std::pow(f[0], 4) / x5;
    consts.push_back(wp.detsyme_constant);

    // f_k {f_i, f_j} = f_j {f_i, f_k} + f_i {f_k, f_j} over all triples of distinct indices
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (i == j || j == k || i == k) continue;
          const CVec3 bij = bracket(f[i], df[i], f[j], df[j]);
          const CVec3 bik = bracket(f[i], df[i], f[k], df[k]);
          const CVec3 bkj = bracket(f[k], df[k], f[j], df[j]);
          double res = 0, scale = 0;
          for (int c = 0; c < 3; ++c) {
            const cplx l = f[k] * bij[c], r1 = f[j] * bik[c], r2 = f[i] * bkj[c];
            res = std::max(res, std::abs(l - r1 - r2));
            scale = std::max(scale, std::abs(l) + std::abs(r1) + std::abs(r2));
          }
          wp.bracket_residual = std::max(wp.bracket_residual, res / scale);
        }

    // f3 {f0,f1,f2} = f0 {f1,f2,f3} - f1 {f0,f2,f3} + f2 {f0,f1,f3}
    auto tb = [&](int a, int b, int c) { return triple_bracket(f[a], df[a], f[b], df[b], f[c], df[c]); };
    const CVec3 t012 = tb(0, 1, 2), t123 = tb(1, 2, 3), t023 = tb(0, 2, 3), t013 = tb(0, 1, 3);
    double res = 0, scale = 0;
    for (int c = 0; c < 3; ++c) {
      const cplx terms[4] = {f[3] * t012[c], -f[0] * t123[c], f[1] * t023[c], -f[2] * t013[c]};
      res = std::max(res, std::abs(terms[0] + terms[1] + terms[2] + terms[3]));
      scale = std::max(scale, std::abs(terms[0]) + std::abs(terms[1]) + std::abs(terms[2]) + std::abs(terms[3]));
    }
    wp.triple_relation_residual = res / scale;

    rep.max_bracket_residual = std::max(rep.max_bracket_residual, wp.bracket_residual);
    rep.max_triple_relation_residual = std::max(rep.max_triple_relation_residual, wp.triple_relation_residual);
    rep.max_jacobian_fd_error = std::max(rep.max_jacobian_fd_error, wp.jacobian_fd_error);
    rep.points.push_back(wp);
  }
  if (!consts.empty()) rep.detsyme_relative_spread = spread(consts, rep.detsyme_mean);
  return rep;
}

}  // namespace siegel
