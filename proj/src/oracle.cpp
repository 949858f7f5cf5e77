#include "besstruve/oracle.hpp"

#include "besstruve/errors.hpp"
#include "besstruve/exact_gamma.hpp"
#include "besstruve/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace besstruve {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr int kMaxTaylorTerms = 200;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

QuadratureRule rule_for(double tol) {
  if (!(tol >= 1e-13)) throw DomainError("quadrature tolerance must be >= 1e-13");
  return QuadratureRule{1, 32, tol};
}

// cos(x + k pi/2) and sin(x + k pi/2) without rounding the phase.
double shifted_cos(double x, int k) {
  switch (k & 3) {
    case 0: return std::cos(x);
    case 1: return -std::sin(x);
    case 2: return -std::cos(x);
    default: return std::sin(x);
  }
}

double shifted_sin(double x, int k) {
  switch (k & 3) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

// Differentiated series as sum_n coeff[n] z^(first_exp + 2n); the struve
// coefficients are stored without their 1/pi.
struct TaylorCoefficients {
  int first_exp = 0;
  std::vector<double> coeff;
};

TaylorCoefficients build_coefficients(KernelKind kind, int k) {
  TaylorCoefficients tc;
  // Exponent of the undifferentiated term n is 2n (bessel) or 2n+1 (struve).
  const int offset = kind == KernelKind::bessel ? 0 : 1;
  int n = 0;
  while (2 * n + offset < k) ++n;
  tc.first_exp = 2 * n + offset - k;
  for (int count = 0; count <= kMaxTaylorTerms; ++count, ++n) {
    const int p = 2 * n + offset;
    Rational c = factorial(p) * reciprocal_factorial(p - k);
    if (n % 2 != 0) c = -c;
    if (kind == KernelKind::bessel) {
      c *= reciprocal_factorial(n) * reciprocal_factorial(n + 1) / pow2(2 * n + 1);
    } else {
      const PiScaled g = gamma_half(n + 1) * gamma_half(n + 2);
      c /= g.rational_part(2) * pow2(2 * n + 2);
    }
    tc.coeff.push_back(c.to_double());
  }
  return tc;
}

const TaylorCoefficients& coefficients(KernelKind kind, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TaylorCoefficients> cache;
  const std::lock_guard lock(mu);
  const auto key = std::make_pair(static_cast<int>(kind), k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_coefficients(kind, k)).first;
  return it->second;
}

}  // namespace

QuadratureOutcome quad_defining_s_detail(double z, double zeta, const QuadratureRule& rule) {
  require_finite(z, "quad_defining_s");
  require_finite(zeta, "quad_defining_s");
  auto f = [z, zeta](double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    return c * s * s * std::sin(z * c) * std::sin(zeta * c * c);
  };
  return integrate_refined(f, 0.0, kHalfPi, rule);
}

QuadratureOutcome quad_defining_c_detail(double z, double zeta, const QuadratureRule& rule) {
  require_finite(z, "quad_defining_c");
  require_finite(zeta, "quad_defining_c");
  auto f = [z, zeta](double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    return c * s * s * std::cos(z * c) * std::cos(zeta * c * c);
  };
  return integrate_refined(f, 0.0, kHalfPi, rule);
}

double quad_defining_s(double z, double zeta, double tol) {
  return quad_defining_s_detail(z, zeta, rule_for(tol)).value;
}

double quad_defining_c(double z, double zeta, double tol) {
  return quad_defining_c_detail(z, zeta, rule_for(tol)).value;
}

QuadratureOutcome quad_deriv_kernel_detail(KernelKind kind, int k, double z,
                                           const QuadratureRule& rule) {
  if (k < 0) throw DomainError("quad_deriv_kernel: k must be nonnegative");
  require_finite(z, "quad_deriv_kernel");
  auto f = [kind, k, z](double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double phase = kind == KernelKind::bessel ? shifted_cos(z * c, k) : shifted_sin(z * c, k);
    return std::pow(c, k) * s * s * phase;
  };
  QuadratureOutcome out = integrate_refined(f, 0.0, kHalfPi, rule);
  constexpr double scale = 2 / std::numbers::pi;
  out.value *= scale;
  out.last_change *= scale;
  out.abs_integral *= scale;
  return out;
}

double quad_deriv_kernel(KernelKind kind, int k, double z) {
  return quad_deriv_kernel_detail(kind, k, z, QuadratureRule{1, 32, 1e-13}).value;
}

TaylorValue taylor_deriv_detail(KernelKind kind, int k, double z, int nterms) {
  if (k < 0) throw DomainError("taylor_deriv: k must be nonnegative");
  if (!(std::fabs(z) <= 2)) throw DomainError("taylor_deriv: |z| must be <= 2");
  if (nterms < 1 || nterms > kMaxTaylorTerms) {
    throw DomainError("taylor_deriv: nterms must be in 1..200");
  }
  const TaylorCoefficients& tc = coefficients(kind, k);
  const long double z2 = static_cast<long double>(z) * z;
  long double zp = tc.first_exp == 0 ? 1.0L : std::pow(static_cast<long double>(z), tc.first_exp);
  long double sum = 0;
  long double max_term = 0;
  for (int n = 0; n < nterms; ++n) {
    const long double term = tc.coeff[static_cast<std::size_t>(n)] * zp;
    sum += term;
    max_term = std::max(max_term, std::fabs(term));
    zp *= z2;
  }
  const long double omitted = tc.coeff[static_cast<std::size_t>(nterms)] * zp;
  long double scale = 1;
  if (kind == KernelKind::struve) scale = 1 / std::numbers::pi_v<long double>;
  return {static_cast<double>(sum * scale), static_cast<double>(std::fabs(omitted) * scale),
          static_cast<double>(max_term * scale)};
}

double taylor_deriv(KernelKind kind, int k, double z, int nterms) {
  return taylor_deriv_detail(kind, k, z, nterms).value;
}

}  // namespace besstruve
