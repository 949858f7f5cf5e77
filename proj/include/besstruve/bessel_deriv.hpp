#pragma once

#include "besstruve/eval.hpp"
#include "besstruve/laurent_poly.hpp"

namespace besstruve {

inline constexpr int kMaxBesselClosedOrder = 60;
/// Highest derivative order accepted by the evaluators; orders above the
/// closed-form limit go through the series or quadrature paths.
inline constexpr int kMaxDerivOrder = 120;

/// d^k[J1(z)/z]/dz^k = (-1)^k [p1(z) J1(z) - p0(z) J0(z)], p1 and p0 pure
/// polynomials in 1/z.
struct BesselDerivForm {
  int k = 0;
  LaurentPoly p1;
  LaurentPoly p0;
};

/// Prefactors assembled from the Lommel recurrence, 0 <= k <= 60:
///   p_b(k) = 2 k! sum_{i=0}^{floor(k/2)} (-1)^i / (i! (k-2i)!)
///            * C_{k-i-b}(k+1-i, z) / (2z)^{i+1},   b = 1 for p1, 2 for p0.
/// Results are memoized.
const BesselDerivForm& p_polys(int k);

/// Same prefactors built from the gamma-ratio closed forms r0_poly/r1_poly.
BesselDerivForm p_polys_closed_form(int k);

/// k-th derivative of J1(z)/z for 0 <= k <= 120, |z| <= 50.
EvalResult deriv_j1z(int k, double z, const EvalConfig& cfg = {});

/// Exact value at z = 0: zero for odd k, (-1)^m Gamma(m+1/2)/(2 sqrt(pi) (m+1)!)
/// for k = 2m; 0 <= k <= 200.
double deriv_j1z_at_zero(int k);

}  // namespace besstruve
