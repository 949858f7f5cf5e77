#include "besstruve/errors.hpp"
#include "besstruve/exact_gamma.hpp"
#include "besstruve/laurent_poly.hpp"
#include "besstruve/rational.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace besstruve;

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, -4);
  CHECK(a.numerator_string() == "-3");
  CHECK(a.denominator_string() == "2");
  CHECK(a + Rational(1, 2) == Rational(-1));
  CHECK(a * Rational(2, 3) == Rational(-1));
  CHECK(a / Rational(3) == Rational(-1, 2));
  CHECK(-a == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::from_strings("10", "-4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational to_double rounds to nearest") {
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-2, 3).to_double() == -2.0 / 3.0);
  CHECK(Rational(1, 10).to_double() == 0.1);
  // 2^60 + 1 is not representable; nearest double is 2^60.
  const Rational big = pow2(60) + Rational(1);
  CHECK(big.to_double() == std::ldexp(1.0, 60));
  CHECK(Rational(0).to_double() == 0.0);
}

TEST_CASE("factorials, powers and Pochhammer symbols") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(10) == Rational(3628800));
  CHECK_THROWS_AS(factorial(-1), DomainError);
  CHECK(reciprocal_factorial(4) == Rational(1, 24));
  CHECK(reciprocal_factorial(-3).is_zero());
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3), 4) == Rational(0));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
}

TEST_CASE("exact gamma values") {
  CHECK(gamma_int(5) == Rational(24));
  CHECK_THROWS_AS(gamma_int(0), DomainError);
  CHECK(rgamma_int(-2).is_zero());
  // Gamma(5/2) = 3 sqrt(pi)/4, Gamma(-1/2) = -2 sqrt(pi).
  CHECK(gamma_half(2).coef == Rational(3, 4));
  CHECK(gamma_half(2).half_pi_power == 1);
  CHECK(gamma_half(-1).coef == Rational(-2));
  CHECK(rgamma_half(-1).coef == Rational(-1, 2));
  CHECK(rgamma_half(-1).half_pi_power == -1);
  for (int m = -6; m <= 8; ++m) {
    const double want = std::tgamma(m + 0.5);
    const double got = gamma_half(m).coef.to_double() * std::sqrt(std::numbers::pi);
    CHECK(testutil::close_rel(got, want, 1e-14));
  }
  const PiScaled q = gamma_half(1) * gamma_half(2);  // 3 pi / 8
  CHECK(q.rational_part(2) == Rational(3, 8));
  CHECK_THROWS(q.rational_part(0));
}

TEST_CASE("Laurent polynomial algebra") {
  LaurentPoly p;
  p.add_term(-2, Rational(8));
  p.add_term(0, Rational(-1));
  CHECK(p.terms().size() == 2);
  CHECK(p.max_exponent() == 0);
  CHECK(p.min_exponent() == -2);
  CHECK(p.coeff(-2) == Rational(8));
  CHECK(p.coeff(5).is_zero());

  LaurentPoly q = p - p;
  CHECK(q.is_zero());
  p.add_term(0, Rational(1));
  CHECK(p.terms().size() == 1);

  const LaurentPoly a = LaurentPoly::monomial(Rational(2), -1);
  const LaurentPoly b = LaurentPoly::monomial(Rational(3), 1) + LaurentPoly::constant(Rational(1));
  const LaurentPoly prod = a * b;
  CHECK(prod.coeff(0) == Rational(6));
  CHECK(prod.coeff(-1) == Rational(2));
  CHECK(a.shifted(3) == LaurentPoly::monomial(Rational(2), 2));
  // (2/z)^2 * 3 z = 12 / z
  CHECK(LaurentPoly::monomial(Rational(3), 1).times_power(Rational(1, 2), -2) ==
        LaurentPoly::monomial(Rational(12), -1));
}

TEST_CASE("pi power tags are enforced") {
  CHECK_THROWS(LaurentPoly(2));
  LaurentPoly s = LaurentPoly::monomial(Rational(2, 3), 1, -1);
  const LaurentPoly r = LaurentPoly::constant(Rational(1));
  CHECK_THROWS(s += r);
  LaurentPoly zero;
  zero += s;
  CHECK(zero.pi_power() == -1);
  CHECK(s(3.0) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("Laurent polynomial evaluation") {
  LaurentPoly p;
  p.add_term(-3, Rational(48));
  p.add_term(-1, Rational(-8));
  p.add_term(2, Rational(1, 2));
  const double z = 1.7;
  const double want = 48 / (z * z * z) - 8 / z + 0.5 * z * z;
  const PolyValue v = p.compile().evaluate(z);
  CHECK(testutil::close_rel(v.value, want, 1e-15));
  CHECK(testutil::close_rel(v.abs_sum, 48 / (z * z * z) + 8 / z + 0.5 * z * z, 1e-15));
  CHECK_THROWS_AS(p.compile().evaluate(0.0), DomainError);
  CHECK(LaurentPoly().compile().evaluate(0.0).value == 0.0);
  CHECK(LaurentPoly::constant(Rational(3)).compile().evaluate(0.0).value == 3.0);
}

TEST_CASE("JSON serialization round-trips with descending exponents") {
  LaurentPoly p(-1);
  p.add_term(1, Rational(2, 3));
  p.add_term(-4, Rational(-123456789012345LL, 7));
  const auto j = p.to_json();
  CHECK(j["pi_power"] == -1);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["exp"] == 1);
  CHECK(j["terms"][0]["num"] == "2");
  CHECK(j["terms"][0]["den"] == "3");
  CHECK(j["terms"][1]["num"] == "-123456789012345");
  CHECK(LaurentPoly::from_json(j) == p);
  CHECK(p.to_string() == "(2/3 z - 123456789012345/(7 z^4))/pi");
}
