#include <doctest.h>

#include "siegel/module.hpp"
#include "siegel/textio.hpp"

using namespace siegel;

static Monomial mono(std::vector<int> e) { return Monomial::from_exponents(e); }

TEST_CASE("monomials") {
  const Monomial a = mono({2, 0, 1}), b = mono({1, 3, 0});
  CHECK((a * b).degree() == 7);
  CHECK(Monomial::lcm(a, b) == mono({2, 3, 1}));
  CHECK(Monomial::gcd(a, b) == mono({1, 0, 0}));
  CHECK(mono({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  // grevlex: equal degree, the smaller power of the last variable wins
  CHECK(Monomial::grevlex(mono({1, 1, 0}), mono({2, 0, 0})) < 0);
  CHECK(Monomial::grevlex(mono({1, 1, 0}), mono({1, 0, 1})) > 0);
}

TEST_CASE("graded dimension") {
  CHECK(graded_dimension(10, 4) == 715);
  CHECK(graded_dimension(4, 3) == 20);
  CHECK(graded_dimension(1, 9) == 1);
  CHECK_THROWS_AS(graded_dimension(0, 1), std::invalid_argument);
}

TEST_CASE("arithmetic and printing") {
  const auto p = parse_poly<Rational>("t1^2 - t2*t3", 3);
  const auto q = parse_poly<Rational>("t1 + t3", 3);
  CHECK(to_string(p * q) == to_string(parse_poly<Rational>("t1^3 + t1^2*t3 - t1*t2*t3 - t2*t3^2", 3)));
  CHECK(to_string(parse_poly<Rational>("3/2*t2 - 7 + t1", 3)) == "t1 + 3/2*t2 - 7");
  CHECK((p - p).is_zero());
  CHECK(p.permuted(std::vector<int>{2, 1, 0}) == parse_poly<Rational>("t3^2 - t2*t1", 3));
  CHECK_THROWS(parse_poly<Rational>("t1 +* t2", 3));
  CHECK_THROWS(parse_poly<Rational>("t4", 3));
}

TEST_CASE("module elements") {
  const std::vector<int> sh{1, 1};
  const auto e = parse_element<GF1>("{t1*t2; -t2^2}", 2, sh);
  CHECK(e.degree() == 3);
  CHECK(e.is_homogeneous());
  const auto d = e.monomial_divide(mono({0, 1}));
  CHECK(to_string(d) == "{t1; -t2}");
  const auto f = e.monomial_divide(mono({1, 0}));
  CHECK(to_string(f) == "{t1*t2; -t2^2} / t1");
  CHECK(f.degree() == 2);
  CHECK(parse_element<GF1>(to_string(f), 2, sh) == f);
}
