#include "besstruve/basefn.hpp"
#include "besstruve/bessel_deriv.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/oracle.hpp"
#include "besstruve/struve_deriv.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <tuple>

using namespace besstruve;
using testutil::close_abs;
using testutil::close_rel;

namespace {

LaurentPoly poly(std::initializer_list<std::tuple<int, long, long>> terms, int pi_power = 0) {
  LaurentPoly p(pi_power);
  for (const auto& [e, num, den] : terms) p.add_term(e, Rational(num, den));
  return p;
}

bool same(const StruveDerivForm& a, const StruveDerivForm& b) {
  return a.sigma0 == b.sigma0 && a.sigma1 == b.sigma1 && a.sigma2 == b.sigma2;
}

// Works with Q0 = sigma0 (2/z)^k, Q1 = sigma1 (2/z)^(k+1), Q2 = sigma2 (2/z)^(k-1)
// so that (-1)^k d^k[H1/z] = H0 Q0 + H1 Q1 + Q2. Differentiating with
// H0' = 2/pi - H1 and H1' = H0 - H1/z and flipping the sign gives order k+1.
struct QForm {
  LaurentPoly q0, q1, q2;
};

QForm step(const QForm& f) {
  using testutil::derivative;
  const LaurentPoly two_over_pi = LaurentPoly::constant(Rational(2), -1);
  return {-(derivative(f.q0) + f.q1), -(derivative(f.q1) - f.q0 - f.q1.shifted(-1)),
          -(derivative(f.q2) + two_over_pi * f.q0)};
}

StruveDerivForm to_sigma(int k, const QForm& f) {
  const Rational half(1, 2);
  return {k, f.q0.times_power(half, k), f.q1.times_power(half, k + 1),
          f.q2.times_power(half, k - 1)};
}

}  // namespace

TEST_CASE("negative-order Struve functions") {
  for (double z : {0.3, 1.0, 2.0, 4.5}) {
    CAPTURE(z);
    CHECK(close_abs(neg_order_struve(1, z), 2 / std::numbers::pi - struve_h1(z).value, 1e-14));
    CHECK(close_abs(neg_order_struve(0, z), struve_h0(z).value, 1e-15));
    for (int nu = 2; nu <= 8; ++nu) {
      CAPTURE(nu);
      CHECK(close_rel(neg_order_struve(nu, z), struve_hn(-nu, z).value, 1e-10, 1e-12));
    }
  }
  CHECK(neg_order_tail_poly(0).is_zero());
  CHECK(neg_order_tail_poly(1) == poly({{0, 2, 1}}, -1));
  CHECK_THROWS_AS(neg_order_struve(41, 1.0), DomainError);
}

TEST_CASE("inhomogeneous reduction terms") {
  CHECK(s_sum_poly(3) == poly({{0, 8, 3}, {2, 2, 15}}, -1));
  CHECK(s_sum_poly(5) == poly({{4, 2, 945}, {2, 2, 105}, {0, -8, 5}, {-2, 128, 1}}, -1));
  for (int nu = 2; nu <= 40; ++nu) {
    CAPTURE(nu);
    CHECK(s_sum_poly(nu) == s_sum_poly_ascending(nu));
  }
  CHECK_THROWS_AS(s_sum_poly(1), DomainError);
  CHECK_THROWS_AS(s_sum_poly(61), DomainError);
}

TEST_CASE("Struve reduction matches the power series") {
  for (int nu = 2; nu <= 20; ++nu) {
    for (double z : {0.01, 0.5, 2.0, 7.0, -3.0}) {
      CAPTURE(nu);
      CAPTURE(z);
      CHECK(close_rel(struve_reduce(nu, z), struve_hn(nu, z).value, 1e-10, 1e-14));
    }
  }
  CHECK_THROWS_AS(struve_reduce(2, 1e-7), DomainError);
  CHECK_THROWS_AS(struve_reduce(2, 51), DomainError);
}

TEST_CASE("frak_c coefficients") {
  CHECK(frak_c(5, 3, 1) == Rational(1, 4));
  CHECK(frak_c(5, 3, 2) == Rational(-7, 60));
  CHECK(frak_c(9, 5, 3) == Rational(361, 80640));
  CHECK(frak_c(1, 0, 1) == Rational(4, 3));
  CHECK(frak_c(4, 2, 0) == Rational(0));
  CHECK_THROWS_AS(frak_c(3, 4, 1), DomainError);
  CHECK_THROWS_AS(frak_c(3, 1, 4), DomainError);
  CHECK_THROWS_AS(frak_c(61, 1, 1), DomainError);
}

TEST_CASE("low-order sigma polynomials") {
  const StruveDerivForm& s2 = sigma_polys_composed(2);
  CHECK(s2.sigma0 == poly({{0, -3, 4}}));
  CHECK(s2.sigma1 == poly({{0, 3, 4}, {2, -1, 8}}));
  CHECK(s2.sigma2 == poly({{0, 1, 1}}, -1));
  const StruveDerivForm& s3 = sigma_polys_composed(3);
  CHECK(s3.sigma0 == poly({{0, -3, 2}, {2, 1, 8}}));
  CHECK(s3.sigma1 == poly({{0, 3, 2}, {2, -5, 16}}));
  CHECK(s3.sigma2 == poly({{0, 2, 1}}, -1));
  const StruveDerivForm& s4 = sigma_polys_composed(4);
  CHECK(s4.sigma0 == poly({{0, -15, 4}, {2, 3, 8}}));
  CHECK(s4.sigma1 == poly({{0, 15, 4}, {2, -27, 32}, {4, 1, 32}}));
  CHECK(s4.sigma2 == poly({{0, 5, 1}, {2, -1, 4}}, -1));
  CHECK(sigma_polys_composed(0).sigma1 == poly({{0, 1, 2}}));
  CHECK_THROWS_AS(sigma_polys_composed(42), DomainError);
  CHECK_THROWS_AS(sigma_polys_explicit(2), DomainError);
  CHECK_THROWS_AS(sigma_polys_4k1(11), DomainError);
}

TEST_CASE("sigma polynomials agree with symbolic differentiation") {
  QForm f{LaurentPoly(), poly({{-1, 1, 1}}), LaurentPoly(-1)};
  for (int k = 0; k <= kMaxStruveClosedOrder; ++k) {
    CAPTURE(k);
    CHECK(same(sigma_polys_composed(k), to_sigma(k, f)));
    f = step(f);
  }
}

TEST_CASE("explicit, specialised and composed sigma agree") {
  for (int k = 1; k <= kMaxStruveClosedOrder; k += 2) {
    CAPTURE(k);
    CHECK(same(sigma_polys_explicit(k), sigma_polys_composed(k)));
  }
  for (int kappa = 0; kappa <= 10; ++kappa) {
    CAPTURE(kappa);
    CHECK(same(sigma_polys_4k1(kappa), sigma_polys_composed(4 * kappa + 1)));
  }
}

TEST_CASE("H-coefficient prefactors coincide with the Bessel ones") {
  const Rational half(1, 2);
  for (int k = 0; k <= 30; ++k) {
    CAPTURE(k);
    const StruveDerivForm& s = sigma_polys_composed(k);
    CHECK(s.sigma1.times_power(half, -(k + 1)) == p_polys(k).p1);
    CHECK(-s.sigma0.times_power(half, -k) == p_polys(k).p0);
  }
}

TEST_CASE("remainder polynomial with and without cancellation") {
  CHECK(struve_remainder_poly_uncancelled(0).is_zero());
  for (int k = 1; k <= 60; ++k) {
    CAPTURE(k);
    CHECK(struve_remainder_poly(k) == struve_remainder_poly_uncancelled(k));
  }
}

TEST_CASE("values at the origin") {
  CHECK(close_abs(deriv_h1z_at_zero(1), 2 / (3 * std::numbers::pi), 1e-16));
  CHECK(deriv_h1z_at_zero(0) == 0.0);
  CHECK(deriv_h1z_at_zero(2) == 0.0);
  for (int m = 0; m <= 15; ++m) {
    CAPTURE(m);
    const double want = std::pow(-1.0, m) * std::tgamma(m + 1.0) /
                        (2 * std::sqrt(std::numbers::pi) * std::tgamma(m + 2.5));
    CHECK(close_rel(deriv_h1z_at_zero(2 * m + 1), want, 1e-13));
  }
  CHECK_THROWS_AS(deriv_h1z_at_zero(201), DomainError);
  CHECK(deriv_h1z(2, 0).value == 0.0);
  CHECK(close_abs(deriv_h1z(1, 0).value, 2 / (3 * std::numbers::pi), 1e-16));
}

TEST_CASE("derivatives agree with reference values and quadrature") {
  CHECK(close_abs(deriv_h1z(5, 2).value, -0.0020093535252292834794, 1e-13));
  CHECK(close_abs(deriv_h1z(2, 1).value, -0.077063427767560515207, 1e-13));
  CHECK(close_abs(deriv_h1z(2, 3).value, -0.092574299836322391724, 1e-13));
  CHECK(close_abs(deriv_h1z(9, 0.3).value, 0.022708080259545091825, 1e-14));
  CHECK(close_abs(deriv_h1z(30, 20).value, -0.0011084077792162743142, 1e-12));
  for (int k = 0; k <= 13; ++k) {
    for (double z : {1.0, 2.0, 5.0, 10.0, 30.0}) {
      CAPTURE(k);
      CAPTURE(z);
      const EvalResult r = deriv_h1z(k, z);
      const double want = quad_deriv_kernel(KernelKind::struve, k, z);
      CHECK(close_rel(r.value, want, 1e-8, 1e-12));
      CHECK(std::fabs(r.value - want) <= 10 * r.abs_err_estimate + 1e-14);
      // H1(z)/z is odd.
      CHECK(close_abs(deriv_h1z(k, -z).value, (k % 2 == 0 ? -1 : 1) * r.value, 1e-12));
    }
  }
}

TEST_CASE("sigma form evaluated directly matches quadrature") {
  for (int k = 1; k <= 8; ++k) {
    for (double z : {1.5, 4.0}) {
      CAPTURE(k);
      CAPTURE(z);
      const StruveDerivForm& s = sigma_polys_composed(k);
      const double t = 2 / z;
      const double v = struve_h0(z).value * s.sigma0(z) * std::pow(t, k) +
                       struve_h1(z).value * s.sigma1(z) * std::pow(t, k + 1) +
                       s.sigma2(z) * std::pow(t, k - 1);
      const double sign = k % 2 == 0 ? 1 : -1;
      CHECK(close_rel(sign * v, quad_deriv_kernel(KernelKind::struve, k, z), 1e-9, 1e-12));
    }
  }
}

TEST_CASE("evaluation paths and errors") {
  CHECK(deriv_h1z(3, 0.2).path == EvalPath::taylor);
  CHECK(deriv_h1z(1, 5).path == EvalPath::closed_form);
  CHECK(deriv_h1z(60, 10).path == EvalPath::quadrature);
  EvalConfig series;
  series.small_z_threshold = std::nextafter(0.5, 1.0);
  for (int k = 0; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(close_abs(deriv_h1z(k, 0.5, series).value, deriv_h1z(k, 0.5).value, 1e-9));
  }
  CHECK_THROWS_AS(deriv_h1z(121, 1), DomainError);
  CHECK_THROWS_AS(deriv_h1z(1, -50.5), DomainError);
  EvalConfig impossible;
  impossible.abs_tol = 1e-300;
  CHECK_THROWS_AS(deriv_h1z(5, 3, impossible), ConvergenceError);
}
