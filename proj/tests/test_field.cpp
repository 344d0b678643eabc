#include <doctest.h>

#include "siegel/field.hpp"

using namespace siegel;

TEST_CASE("prime field arithmetic") {
  const GF1 a = GF1::from_int(3), b = GF1::from_int(-5);
  CHECK((a + b) == GF1::from_int(-2));
  CHECK((a * b) == GF1::from_int(-15));
  CHECK((a * a.inv()).is_one());
  CHECK(GF1::from_int(2147483647).is_zero());
  CHECK((-a + a).is_zero());
}

TEST_CASE("rational reconstruction") {
  const GF1 h = GF1::from_int(3) * GF1::from_int(2).inv();
  REQUIRE(h.lift());
  CHECK(*h.lift() == mpq_class(3, 2));
  CHECK(GF2::from_int(-7).to_string() == "-7");
  // a residue with no small preimage prints raw
  CHECK(GF1::from_int(1234567890).to_string() == "[1234567890]");
}

TEST_CASE("the two primes differ") {
  CHECK(GF1::name() != GF2::name());
  CHECK(GF1::from_int(2147483629).is_zero() == false);
  CHECK(GF2::from_int(2147483629).is_zero());
}

TEST_CASE("rationals") {
  const Rational q = Rational::from_rational(mpq_class(1, 3));
  CHECK((q + q + q).is_one());
  CHECK(q.inv() == Rational::from_int(3));
  CHECK(Rational::kExact);
  CHECK_FALSE(GF1::kExact);
}
