#include <doctest.h>

#include "siegel/groebner.hpp"
#include "siegel/hilbert.hpp"
#include "siegel/textio.hpp"
#include "siegel/thetaring.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

TEST_CASE("series arithmetic") {
  const HilbertSeries s({0, 6, 36, 126, 316, 606, 252, -318, -60, 60}, 4);
  CHECK(s.coefficients(1, 8) == std::vector<std::int64_t>{6, 60, 330, 1300, 4060, 9952, 20000, 35168});
  // 316 + 126*4 + 36*10 + 6*20 = 1300
  CHECK(316 + 126 * 4 + 36 * 10 + 6 * 20 == s.coefficient(4));
  CHECK(HilbertSeries({1, -1}, 2) == HilbertSeries({1}, 1));
  CHECK((s - s).coefficients(0, 5) == std::vector<std::int64_t>(6, 0));
  CHECK(s.shifted(-1).coefficient(0) == 6);
}

TEST_CASE("monomial ideals") {
  // k[x,y,z]/(xy): (1 - t^2)/(1-t)^3
  const auto n = monomial_ideal_numerator({Monomial::variable(0) * Monomial::variable(1)});
  CHECK(HilbertSeries(n, 3) == HilbertSeries({1, 0, -1}, 3));
  // k[x,y]/(x^2, xy, y^3): 1 + 2t + 1t^2 (x y^0.. : 1, x, y, y^2)
  const auto m = monomial_ideal_numerator({Monomial::from_exponents(std::vector<int>{2, 0}),
                                           Monomial::from_exponents(std::vector<int>{1, 1}),
                                           Monomial::from_exponents(std::vector<int>{0, 3})});
  CHECK(HilbertSeries(m, 2).coefficients(0, 4) == std::vector<std::int64_t>{1, 2, 1, 0, 0});
}

TEST_CASE("shifted free modules") {
  const std::vector<int> sh{0, 2};
  const auto gb = buchberger(std::vector<ModuleElement<Rational>>{}, 2, sh);
  CHECK(hilbert_series(gb).coefficients(0, 3) == std::vector<std::int64_t>{1, 2, 4, 6});
}

TEST_CASE("Riemann quotient dimensions") {
  // exact slice ranks over GF(2^31-1), frozen: 1, 10, 55, 220, 695, 1802, 3969
  const std::vector<std::int64_t> frozen{1, 10, 55, 220, 695, 1802, 3969};
  ThetaRing<GF1> ring;
  const auto hs = hilbert_series(ring.riemann_basis());
  CHECK(hs.coefficients(0, 6) == frozen);
  for (int d = 0; d <= 5; ++d) CHECK(riemann_slice_dimension(d) == frozen[d]);
}
