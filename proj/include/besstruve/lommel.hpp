#pragma once

#include "besstruve/laurent_poly.hpp"

namespace besstruve {

inline constexpr int kMaxLommelIndex = 80;

/// Prefactor C_n(nu, z) of the distant-neighbour Bessel recurrence
///   J_nu = C_n J_{nu-n} - C_{n-1} J_{nu-n-1},
/// generated from C_0 = 1, C_1 = 2(nu-1)/z and
/// C_n = (2(nu-n)/z) C_{n-1} - C_{n-2}. n = -1 yields the zero polynomial.
LaurentPoly c_poly(int n, int nu);

/// C_{nu-2}(nu, z) (the Lommel polynomial R_{nu-2,2}) from its gamma-ratio
/// closed form; nu >= 2.
LaurentPoly r0_poly(int nu);

/// C_{nu-1}(nu, z) (the Lommel polynomial R_{nu-1,1}) from its gamma-ratio
/// closed form; nu >= 1.
LaurentPoly r1_poly(int nu);

/// Terminating 2F3((1-j)/2, -j/2; 1-nu, -j, nu-j; -z^2) reduced to a finite
/// polynomial in z^2; 0 <= j <= nu - 2. Satisfies
///   c_poly(j, nu) == (-2/z)^j (1-nu)_j reduced_2f3_poly(j, nu).
LaurentPoly reduced_2f3_poly(int j, int nu);

/// J_nu(z) = R1(nu, z) J_1(z) - R0(nu, z) J_0(z), nu >= 2, 1e-6 <= |z| <= 50.
/// The two products cancel heavily for small z, so the right-hand side is
/// evaluated in multiprecision floating point and rounded once.
double bessel_reduce(int nu, double z);

}  // namespace besstruve
