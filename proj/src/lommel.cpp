#include "besstruve/lommel.hpp"

#include "besstruve/basefn.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/exact_gamma.hpp"
#include "mp_reduce.hpp"

#include <cmath>
#include <string>

namespace besstruve {

LaurentPoly c_poly(int n, int nu) {
  if (n < -1 || n > kMaxLommelIndex) throw DomainError("c_poly: index out of range");
  if (n == -1) return LaurentPoly();
  LaurentPoly prev;                           // C_{-1}
  LaurentPoly cur = LaurentPoly::constant(1);  // C_0
  for (int m = 1; m <= n; ++m) {
    LaurentPoly next = cur.shifted(-1) * Rational(2 * (nu - m)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly r0_poly(int nu) {
  if (nu < 2 || nu - 2 > kMaxLommelIndex) throw DomainError("r0_poly: requires nu >= 2");
  // sum_{j=0}^{ceil(nu/2 - 1)} Gamma(nu-j) Gamma(nu-1-j) / Gamma(nu-1-2j)
  //   * (-1)^j / (j! (j+1)!) * (2/z)^{nu-2-2j}
  LaurentPoly r;
  const int top = (nu - 1) / 2;  // ceil(nu/2 - 1)
  for (int j = 0; j <= top; ++j) {
    Rational c = gamma_int(nu - j) * gamma_int(nu - 1 - j) * rgamma_int(nu - 1 - 2 * j) *
                 reciprocal_factorial(j) * reciprocal_factorial(j + 1);
    if (j % 2 != 0) c = -c;
    const int p = nu - 2 - 2 * j;
    r.add_term(-p, c * pow2(p));
  }
  return r;
}

LaurentPoly r1_poly(int nu) {
  if (nu < 1 || nu - 1 > kMaxLommelIndex) throw DomainError("r1_poly: requires nu >= 1");
  // sum_{j=0}^{ceil((nu-1)/2)} Gamma(nu-j)^2 / Gamma(nu-2j) (-1)^j / (j!)^2 (2/z)^{nu-1-2j}
  LaurentPoly r;
  const int top = nu / 2;  // ceil((nu-1)/2)
  for (int j = 0; j <= top; ++j) {
    const Rational g = gamma_int(nu - j);
    const Rational rf = reciprocal_factorial(j);
    Rational c = g * g * rgamma_int(nu - 2 * j) * rf * rf;
    if (j % 2 != 0) c = -c;
    const int p = nu - 1 - 2 * j;
    r.add_term(-p, c * pow2(p));
  }
  return r;
}

LaurentPoly reduced_2f3_poly(int j, int nu) {
  if (j < 0 || j > nu - 2 || nu - 2 > kMaxLommelIndex) {
    throw DomainError("reduced_2f3_poly: requires 0 <= j <= nu - 2");
  }
  // Gamma(nu-j)/Gamma(nu) sum_{kappa=0}^{ceil((j-1)/2)} (-1)^kappa Gamma(nu-kappa)
  //   Gamma(j+1-kappa) / (Gamma(j+1-2kappa) Gamma(kappa+nu-j)) (z/2)^{2kappa} / kappa!
  const Rational pre = gamma_int(nu - j) / gamma_int(nu);
  LaurentPoly r;
  const int top = j / 2;  // ceil((j-1)/2)
  for (int kappa = 0; kappa <= top; ++kappa) {
    Rational c = pre * gamma_int(nu - kappa) * gamma_int(j + 1 - kappa) *
                 rgamma_int(j + 1 - 2 * kappa) * rgamma_int(kappa + nu - j) *
                 reciprocal_factorial(kappa);
    if (kappa % 2 != 0) c = -c;
    r.add_term(2 * kappa, c * pow2(-2 * kappa));
  }
  return r;
}

double bessel_reduce(int nu, double z) {
  if (nu < 2 || nu - 1 > kMaxLommelIndex) throw DomainError("bessel_reduce: requires 2 <= nu <= 81");
  if (!(std::abs(z) >= 1e-6) || std::abs(z) > kMaxArgument) {
    throw DomainError("bessel_reduce: requires 1e-6 <= |z| <= 50");
  }
  return detail::reduce_multiprecision(detail::ReduceFamily::bessel, r1_poly(nu), r0_poly(nu),
                                       LaurentPoly(), z);
}

}  // namespace besstruve
