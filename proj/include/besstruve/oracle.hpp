#pragma once

// Brute-force references used to validate the closed forms: direct
// quadrature of the defining integrals, differentiation under the integral
// sign, and term-wise differentiation of the ascending series.

#include "besstruve/quadrature.hpp"

namespace besstruve {

enum class KernelKind { bessel, struve };

/// int_0^{pi/2} cos t sin^2 t sin(z cos t) sin(zeta cos^2 t) dt
double quad_defining_s(double z, double zeta, double tol);
/// int_0^{pi/2} cos t sin^2 t cos(z cos t) cos(zeta cos^2 t) dt
double quad_defining_c(double z, double zeta, double tol);

QuadratureOutcome quad_defining_s_detail(double z, double zeta, const QuadratureRule& rule);
QuadratureOutcome quad_defining_c_detail(double z, double zeta, const QuadratureRule& rule);

/// d^k/dz^k of J1(z)/z (bessel) or H1(z)/z (struve) as
///   (2/pi) int_0^{pi/2} cos^k t sin^2 t {cos|sin}(z cos t + k pi/2) dt.
/// Default tolerance 1e-13 absolute.
double quad_deriv_kernel(KernelKind kind, int k, double z);
QuadratureOutcome quad_deriv_kernel_detail(KernelKind kind, int k, double z,
                                           const QuadratureRule& rule);

struct TaylorValue {
  double value = 0.0;
  /// Magnitude of the first omitted term.
  double first_omitted = 0.0;
  /// Largest term magnitude, for the rounding estimate.
  double max_term = 0.0;
};

/// Term-wise k-th derivative of the ascending series of J1(z)/z or H1(z)/z,
/// summing `nterms` nonvanishing terms with exact coefficients.
/// |z| <= 2, 1 <= nterms <= 200.
TaylorValue taylor_deriv_detail(KernelKind kind, int k, double z, int nterms);
double taylor_deriv(KernelKind kind, int k, double z, int nterms);

}  // namespace besstruve
