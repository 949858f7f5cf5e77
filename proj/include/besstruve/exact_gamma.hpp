#pragma once

#include "besstruve/rational.hpp"

namespace besstruve {

/// A rational multiple of a power of sqrt(pi): coef * pi^(half_pi_power / 2).
///
/// Integer and half-integer gamma values, and every product or quotient of
/// them, live in this set. Sums require matching powers.
struct PiScaled {
  Rational coef;
  int half_pi_power = 0;

  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return {a.coef * b.coef, a.half_pi_power + b.half_pi_power};
  }
  friend PiScaled operator/(const PiScaled& a, const PiScaled& b) {
    return {a.coef / b.coef, a.half_pi_power - b.half_pi_power};
  }
  friend PiScaled operator*(const PiScaled& a, const Rational& r) {
    return {a.coef * r, a.half_pi_power};
  }

  /// The rational coefficient, after checking that the residual power of
  /// sqrt(pi) is the expected one (zero terms pass regardless).
  Rational rational_part(int expected_half_pi_power) const;
};

/// Gamma(n) = (n-1)! for n >= 1; throws DomainError at the poles n <= 0.
Rational gamma_int(int n);

/// 1/Gamma(n), zero at the poles n <= 0.
Rational rgamma_int(int n);

/// Gamma(m + 1/2) for any integer m (half-integers are never poles).
PiScaled gamma_half(int m);

/// 1/Gamma(m + 1/2).
PiScaled rgamma_half(int m);

}  // namespace besstruve
