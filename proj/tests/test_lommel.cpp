#include "besstruve/basefn.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/lommel.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <initializer_list>
#include <utility>

using namespace besstruve;
using testutil::close_abs;
using testutil::close_rel;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

// 2F3((1-j)/2, -j/2; 1-nu, -j, nu-j; -z^2) summed term by term; one
// numerator parameter is a nonpositive integer, so the series stops at
// n = floor(j/2).
LaurentPoly hypergeometric_2f3(int j, int nu) {
  const Rational a1(1 - j, 2);
  const Rational a2(-j, 2);
  const Rational b1(1 - nu);
  const Rational b2(-j);
  const Rational b3(nu - j);
  LaurentPoly f;
  for (int n = 0; n <= j / 2; ++n) {
    Rational c = pochhammer(a1, n) * pochhammer(a2, n) /
                 (pochhammer(b1, n) * pochhammer(b2, n) * pochhammer(b3, n) * factorial(n));
    if (n % 2 != 0) c = -c;
    f.add_term(2 * n, c);
  }
  return f;
}

}  // namespace

TEST_CASE("recurrence seeds and small cases") {
  CHECK(c_poly(0, 7) == LaurentPoly::constant(Rational(1)));
  CHECK(c_poly(1, 5) == poly({{-1, 8}}));
  CHECK(c_poly(2, 4) == poly({{-2, 24}, {0, -1}}));
  CHECK(c_poly(-1, 1).is_zero());
  CHECK(c_poly(-1, 9).is_zero());
  CHECK_THROWS_AS(c_poly(81, 90), DomainError);
  CHECK_THROWS_AS(c_poly(-2, 3), DomainError);
}

TEST_CASE("closed-form R polynomials") {
  CHECK(r0_poly(2) == poly({{0, 1}}));
  CHECK(r0_poly(4) == poly({{-2, 24}, {0, -1}}));
  CHECK(r0_poly(7) == poly({{-5, 23040}, {-3, -1920}, {-1, 24}}));
  CHECK(r1_poly(1) == poly({{0, 1}}));
  CHECK(r1_poly(3) == poly({{-2, 8}, {0, -1}}));
  CHECK(r1_poly(8) == poly({{-7, 645120}, {-5, -138240}, {-3, 4800}, {-1, -32}}));
  CHECK_THROWS_AS(r0_poly(1), DomainError);
  CHECK_THROWS_AS(r1_poly(0), DomainError);
}

TEST_CASE("closed forms equal the recurrence") {
  for (int nu = 2; nu <= 40; ++nu) {
    CAPTURE(nu);
    CHECK(r0_poly(nu) == c_poly(nu - 2, nu));
    CHECK(r1_poly(nu) == c_poly(nu - 1, nu));
  }
  CHECK(r1_poly(1) == c_poly(0, 1));
}

TEST_CASE("reduced hypergeometric polynomial") {
  CHECK(reduced_2f3_poly(0, 5) == LaurentPoly::constant(Rational(1)));
  CHECK(reduced_2f3_poly(1, 4) == LaurentPoly::constant(Rational(1)));
  LaurentPoly f24;
  f24.add_term(0, Rational(1));
  f24.add_term(2, Rational(-1, 24));
  CHECK(hypergeometric_2f3(2, 4) == f24);
  CHECK(reduced_2f3_poly(2, 4) == f24);
  for (int nu = 2; nu <= 20; ++nu) {
    for (int j = 0; j <= nu - 2; ++j) {
      CAPTURE(nu);
      CAPTURE(j);
      const LaurentPoly f = reduced_2f3_poly(j, nu);
      CHECK(f == hypergeometric_2f3(j, nu));
      Rational scale = pochhammer(Rational(1 - nu), j) * pow2(j);
      if (j % 2 != 0) scale = -scale;
      CHECK(c_poly(j, nu) == f.shifted(-j) * scale);
    }
  }
  CHECK_THROWS_AS(reduced_2f3_poly(3, 4), DomainError);
}

TEST_CASE("Bessel reduction matches the series") {
  CHECK(close_abs(bessel_reduce(2, 1.5), 0.23208767214421472724, 1e-13));
  CHECK(close_abs(bessel_reduce(5, 3), 0.043028434877047583925, 1e-13));
  CHECK(close_abs(bessel_reduce(2, 2), bessel_j1(2).value - bessel_j0(2).value, 1e-15));
  for (int nu = 2; nu <= 10; ++nu) {
    for (double z : {0.5, 1.0, 2.0, 5.0, 8.0, -3.0}) {
      CAPTURE(nu);
      CAPTURE(z);
      const double want = bessel_jn(nu, z).value;
      CHECK(close_rel(bessel_reduce(nu, z), want, 1e-10, 1e-12));
    }
  }
  // Deep cancellation: J_30(0.1) ~ 5e-70.
  const double tiny = bessel_reduce(30, 0.1);
  CHECK(close_rel(tiny, bessel_jn(30, 0.1).value, 1e-12));
  CHECK_THROWS_AS(bessel_reduce(2, 1e-7), DomainError);
  CHECK_THROWS_AS(bessel_reduce(1, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_reduce(3, 60.0), DomainError);
}
