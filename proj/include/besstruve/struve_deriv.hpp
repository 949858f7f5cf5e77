#pragma once

#include "besstruve/eval.hpp"
#include "besstruve/laurent_poly.hpp"
#include "besstruve/rational.hpp"

namespace besstruve {

inline constexpr int kMaxStruveClosedOrder = 41;

/// (-1)^k d^k[H1(z)/z]/dz^k
///   = H0(z) sigma0 (2/z)^k + H1(z) sigma1 (2/z)^(k+1) + sigma2 (2/z)^(k-1).
/// sigma0 and sigma1 are even polynomials in z; sigma2 carries a 1/pi.
struct StruveDerivForm {
  int k = 0;
  LaurentPoly sigma0;
  LaurentPoly sigma1;
  LaurentPoly sigma2;
};

/// H_{-nu}(z) = (-1)^nu H_nu(z) + tail(nu, z), 0 <= nu <= 40.
double neg_order_struve(int nu, double z);

/// The polynomial tail(nu, z) = sum_{j<nu} (-1)^j (z/2)^(2j+1-nu)
///   / (Gamma(j+3/2) Gamma(j+3/2-nu)), pi_power -1, 0 <= nu <= 61.
LaurentPoly neg_order_tail_poly(int nu);

/// Inhomogeneous part S(nu, z) of H_nu = R1 H1 - R0 H0 + S, 2 <= nu <= 60,
/// built from the double sum over descending powers. pi_power -1.
LaurentPoly s_sum_poly(int nu);

/// The same S(nu, z) from the ascending-power form.
LaurentPoly s_sum_poly_ascending(int nu);

/// H_nu(z) = R1(nu,z) H1(z) - R0(nu,z) H0(z) + S(nu,z), 2 <= nu <= 60,
/// 1e-6 <= |z| <= 50. Evaluated like bessel_reduce.
double struve_reduce(int nu, double z);

/// sum_{j=0}^{a} (-1/4)^j / j! (k-nu-j)!/(k-2j)!
///   * sum_{i=0}^{nu-1} (-1)^i / i! sqrt(pi) (k-j-i)! / ((k-nu-j-i)! Gamma(nu+3/2-i)).
/// 0 <= a <= k <= 60, 0 <= nu <= k. A term containing the reciprocal of a
/// negative factorial is zero.
Rational frak_c(int k, int a, int nu);

/// Sigma polynomials from the explicit double sums, odd k in 1..41.
StruveDerivForm sigma_polys_explicit(int k);

/// Explicit sigma polynomials for k = 4 kappa + 1, 0 <= kappa <= 10, using
/// the sums specialised to that order.
StruveDerivForm sigma_polys_4k1(int kappa);

/// Sigma polynomials by exact composition of the derivative expansion with
/// the Struve reduction, 0 <= k <= 41. Memoized.
const StruveDerivForm& sigma_polys_composed(int k);

/// Non-H part of (-1)^k d^k[H1(z)/z] before the H_{k+1-i} are reduced,
///   -k! sum_{j=0}^{floor(k/2)} (-1)^j (z/2)^(k-1-2j) / Gamma(k+3/2-j)
///       * sum_{i=0}^{j} (1/2)^(2i+1) / (i! (k-2i)! Gamma(i+1/2-j)),
/// 1 <= k <= 60. pi_power -1.
LaurentPoly struve_remainder_poly(int k);

/// The same quantity obtained without cancellation, from the negative-order
/// tails of the H_{-(k+1-i)} terms, 0 <= k <= 60.
LaurentPoly struve_remainder_poly_uncancelled(int k);

/// k-th derivative of H1(z)/z for 0 <= k <= 120, |z| <= 50.
EvalResult deriv_h1z(int k, double z, const EvalConfig& cfg = {});

/// Exact value at z = 0: zero for even k, (-1)^m m!/(2 sqrt(pi) Gamma(m+5/2))
/// for k = 2m+1; 0 <= k <= 200.
double deriv_h1z_at_zero(int k);

}  // namespace besstruve
