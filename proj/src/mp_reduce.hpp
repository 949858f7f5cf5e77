#pragma once

// Multiprecision evaluation of the order reductions. The prefactor
// polynomials grow like (2/z)^nu while the reduced function decays like
// (z/2)^nu, so near the origin the two products cancel far beyond double
// precision.

#include "besstruve/laurent_poly.hpp"

namespace besstruve::detail {

enum class ReduceFamily { bessel, struve };

/// r1(z) F1(z) - r0(z) F0(z) + s(z) rounded to double, where F is J (bessel)
/// or H (struve) and s may be the zero polynomial. Precision grows until the
/// observed cancellation leaves more than 64 correct bits.
double reduce_multiprecision(ReduceFamily family, const LaurentPoly& r1, const LaurentPoly& r0,
                             const LaurentPoly& s, double z);

}  // namespace besstruve::detail
