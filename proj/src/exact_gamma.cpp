#include "besstruve/exact_gamma.hpp"

#include "besstruve/errors.hpp"

#include <string>

namespace besstruve {

Rational PiScaled::rational_part(int expected_half_pi_power) const {
  if (!coef.is_zero() && half_pi_power != expected_half_pi_power) {
    throw std::logic_error("PiScaled: residual sqrt(pi) power " +
                           std::to_string(half_pi_power) + ", expected " +
                           std::to_string(expected_half_pi_power));
  }
  return coef;
}

Rational gamma_int(int n) {
  if (n <= 0) throw DomainError("gamma_int: pole at nonpositive integer");
  return factorial(n - 1);
}

Rational rgamma_int(int n) { return n <= 0 ? Rational(0) : reciprocal_factorial(n - 1); }

PiScaled gamma_half(int m) {
  // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
  // Gamma(1/2 - n) = (-4)^n n! sqrt(pi) / (2n)!
  if (m >= 0) {
    return {factorial(2 * m) / (pow2(2 * m) * factorial(m)), 1};
  }
  const int n = -m;
  Rational c = pow2(2 * n) * factorial(n) / factorial(2 * n);
  if (n % 2 != 0) c = -c;
  return {c, 1};
}

PiScaled rgamma_half(int m) {
  const PiScaled g = gamma_half(m);
  return {Rational(1) / g.coef, -g.half_pi_power};
}

}  // namespace besstruve
