#include <doctest.h>

#include <numbers>

#include "siegel/numerics.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

TEST_CASE("theta null at i times the identity") {
  // mpmath, 30 digits: 1.18034059901609...
  const SiegelPoint Z{{0, 1}, {0, 0}, {0, 1}};
  CHECK(std::abs(theta(even(1), Z) - 1.1803405990161) < 1e-12);
  // odd characteristics vanish at z = 0
  CHECK(std::abs(theta(odd(3), Z)) < 1e-14);
  // at diag(i, i) the series factors: theta_3(i)^2 with theta_3(i) = 1.0864348112133
  CHECK(std::abs(theta(even(1), Z) - 1.0864348112133 * 1.0864348112133) < 1e-12);
}

TEST_CASE("sample points and truncation") {
  const auto pts = sample_siegel(7, 10);
  REQUIRE(pts.size() == 10);
  for (const auto& Z : pts) {
    CHECK(Z.min_imag_eigenvalue() >= 1 - 1e-12);
    CHECK(theta_tail_bound(Z, 10) < 1e-12);
  }
  CHECK(sample_siegel(7, 3)[2].z1 == pts[2].z1);
  const SiegelPoint bad{{0, 0.01}, {0, 0}, {0, 0.01}};
  CHECK_THROWS_AS(theta(even(1), bad, EvalConfig{2, 1e-12}), TruncationError);
  const SiegelPoint outside{{0, 1}, {0, 2}, {0, 1}};
  CHECK_THROWS_AS(theta(even(1), outside), std::domain_error);
}

TEST_CASE("gradient matches finite differences") {
  const auto Z = sample_siegel(3, 1)[0];
  const auto g = theta_grad(odd(2), Z);
  const double h = 1e-5;
  const cplx d0 = (theta(odd(2), Z, {}, {h, 0}) - theta(odd(2), Z, {}, {-h, 0})) / (2 * h);
  CHECK(std::abs(d0 - g[0]) < 1e-7 * std::max(1.0, std::abs(g[0])));
}

TEST_CASE("Riemann quartics vanish") {
  for (const auto& r : riemann_residuals(sample_values(7, 10))) CHECK(r.max_residual < 1e-9);
}

TEST_CASE("D-table normalization") {
  const auto certs = certify_dtable(sample_values(7, 10));
  REQUIRE(certs.size() == 15);
  for (const auto& c : certs) {
    CHECK(c.agrees);
    // det / (pi^2 product) = -sign: the table is normalized by (pi i)^2
    CHECK(std::abs(c.mean_ratio + static_cast<double>(c.table_sign)) < 1e-8);
  }
}

TEST_CASE("Wieber identities") {
  const auto rep = wieber_checks(sample_siegel(7, 10));
  CHECK(rep.max_bracket_residual < 1e-7);
  CHECK(rep.max_triple_relation_residual < 1e-7);
  CHECK(rep.detsyme_relative_spread < 1e-6);
  CHECK(rep.max_jacobian_fd_error < 1e-6);
  // frozen value of the constant
  CHECK(std::abs(rep.detsyme_mean - cplx(0, 0.968946146259)) < 1e-9);
}
