#include "besstruve/struve_deriv.hpp"

#include "besstruve/basefn.hpp"
#include "besstruve/bessel_deriv.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/exact_gamma.hpp"
#include "besstruve/lommel.hpp"
#include "deriv_eval.hpp"
#include "mp_reduce.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>

namespace besstruve {

namespace {

// ceil(n/2) for any integer n.
int ceil_half(int n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

Rational signed_unit(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

// (-1/4)^i / (i! (k-2i)!), zero once k-2i < 0.
Rational quarter_weight(int i, int k) {
  return signed_unit(i) * pow2(-2 * i) * reciprocal_factorial(i) * reciprocal_factorial(k - 2 * i);
}

// (z/2)^e with coefficient c/pi.
void add_half_power(LaurentPoly& p, int e, const Rational& c) { p.add_term(e, c * pow2(-e)); }

LaurentPoly s_part(int nu) { return nu >= 2 ? s_sum_poly(nu) : LaurentPoly(-1); }

}  // namespace

LaurentPoly neg_order_tail_poly(int nu) {
  if (nu < 0 || nu > 61) throw DomainError("neg_order_tail_poly: nu must be in 0..61");
  LaurentPoly r(-1);
  for (int j = 0; j < nu; ++j) {
    const PiScaled g = rgamma_half(j + 1) * rgamma_half(j + 1 - nu);
    add_half_power(r, 2 * j + 1 - nu, signed_unit(j) * g.rational_part(-2));
  }
  return r;
}

double neg_order_struve(int nu, double z) {
  if (nu < 0 || nu > 40) throw DomainError("neg_order_struve: nu must be in 0..40");
  if (!std::isfinite(z) || std::fabs(z) > kMaxArgument) {
    throw DomainError("neg_order_struve: |z| must be <= 50");
  }
  double h = 0;
  if (nu == 0) {
    h = struve_h0(z).value;
  } else if (nu == 1) {
    h = struve_h1(z).value;
  } else {
    h = struve_hn(nu, z).value;
  }
  if (nu % 2 != 0) h = -h;
  if (nu == 0) return h;
  if (z == 0 && nu >= 2) throw DomainError("neg_order_struve: z = 0 with a negative power");
  const LaurentPoly tail = neg_order_tail_poly(nu);
  return h + tail(z);
}

LaurentPoly s_sum_poly(int nu) {
  if (nu < 2 || nu > 60) throw DomainError("s_sum_poly: nu must be in 2..60");
  LaurentPoly r(-1);
  for (int j = 0; j <= nu - 2; ++j) {
    const Rational pre = pow2(2 * nu - 1 - 2 * j) * gamma_int(nu - j) / gamma_int(2 * nu - 2 * j);
    for (int kappa = 0; kappa <= j / 2; ++kappa) {
      const Rational c = pre * signed_unit(kappa) * gamma_int(nu - kappa) * gamma_int(j + 1 - kappa) *
                         rgamma_int(j + 1 - 2 * kappa) * rgamma_int(kappa + nu - j) *
                         reciprocal_factorial(kappa);
      add_half_power(r, 2 * kappa - 2 * j + nu - 1, c);
    }
  }
  return r;
}

LaurentPoly s_sum_poly_ascending(int nu) {
  if (nu < 2 || nu > 60) throw DomainError("s_sum_poly_ascending: nu must be in 2..60");
  LaurentPoly r(-1);
  for (int mu = 0; mu <= (nu - 1) / 2 - 1; ++mu) {
    const PiScaled g = gamma_half(mu) / gamma_half(nu - mu);
    add_half_power(r, nu - 1 - 2 * mu, g.rational_part(0));
  }
  for (int mu = 0; mu <= nu / 2 - 1; ++mu) {
    PiScaled inner{Rational(0), -1};
    for (int i = 0; i <= mu; ++i) {
      const PiScaled t = rgamma_half(mu + 2 - i) *
                         (signed_unit(i) * gamma_int(nu - i) * rgamma_int(nu - 1 - mu - i) *
                          reciprocal_factorial(i));
      inner.coef += t.rational_part(-1);
    }
    const Rational c = inner.coef * factorial(nu - 2 - mu) * rgamma_int(mu + 2);
    add_half_power(r, 3 - nu + 2 * mu, c);
  }
  return r;
}

double struve_reduce(int nu, double z) {
  if (nu < 2 || nu > 60) throw DomainError("struve_reduce: nu must be in 2..60");
  if (!std::isfinite(z) || !(std::fabs(z) >= 1e-6) || std::fabs(z) > kMaxArgument) {
    throw DomainError("struve_reduce: requires 1e-6 <= |z| <= 50");
  }
  return detail::reduce_multiprecision(detail::ReduceFamily::struve, r1_poly(nu), r0_poly(nu),
                                       s_sum_poly(nu), z);
}

Rational frak_c(int k, int a, int nu) {
  if (a < 0 || k < a || k > 60 || nu < 0 || nu > k) {
    throw DomainError("frak_c: requires 0 <= a <= k <= 60 and 0 <= nu <= k");
  }
  Rational sum;
  for (int j = 0; j <= a; ++j) {
    if (k - 2 * j < 0 || k - nu - j < 0) continue;
    Rational inner;
    for (int i = 0; i < nu; ++i) {
      if (k - nu - j - i < 0) continue;
      // sqrt(pi) / Gamma(nu + 3/2 - i) is rational.
      const Rational g = rgamma_half(nu + 1 - i).rational_part(-1);
      inner += signed_unit(i) * reciprocal_factorial(i) * factorial(k - j - i) *
               reciprocal_factorial(k - nu - j - i) * g;
    }
    sum += quarter_weight(j, k) * factorial(k - nu - j) * inner;
  }
  return sum;
}

namespace {

// Inner sums of the sigma0 and sigma1 displays for index nu, i in 0..imax.
Rational sigma0_block(int k, int nu, int imax) {
  Rational inner;
  for (int i = 0; i <= imax; ++i) {
    if (k - 1 - 2 * nu - i < 0 || k - 2 * i < 0) continue;
    inner += quarter_weight(i, k) * factorial(k - nu - i) * factorial(k - 1 - nu - i) *
             reciprocal_factorial(k - 1 - 2 * nu - i);
  }
  return -signed_unit(nu) * factorial(k) * inner / Rational(2) * reciprocal_factorial(nu) *
         reciprocal_factorial(nu + 1) * pow2(-2 * nu);
}

Rational sigma1_block(int k, int nu, int imax) {
  Rational inner;
  for (int i = 0; i <= imax; ++i) {
    if (k - 2 * nu - i < 0 || k - 2 * i < 0) continue;
    const Rational f = factorial(k - nu - i);
    inner += quarter_weight(i, k) * f * f * reciprocal_factorial(k - 2 * nu - i);
  }
  const Rational rn = reciprocal_factorial(nu);
  return signed_unit(nu) * factorial(k) * inner / Rational(2) * rn * rn * pow2(-2 * nu);
}

// Braced term of the upper sigma2 sum: C(k, a, nu)/nu! plus the gamma tail
// over i in ilo..ihi.
Rational sigma2_upper(int k, int a, int nu, int ilo, int ihi) {
  Rational c = frak_c(k, a, nu) * reciprocal_factorial(nu);
  for (int i = ilo; i <= ihi; ++i) {
    if (k - 2 * i < 0) continue;
    const PiScaled g = gamma_half(k - nu - i) / gamma_half(nu + 1);
    c += quarter_weight(i, k) * g.rational_part(0);
  }
  return c;
}

}  // namespace

StruveDerivForm sigma_polys_explicit(int k) {
  if (k < 1 || k > kMaxStruveClosedOrder || k % 2 == 0) {
    throw DomainError("sigma_polys_explicit: k must be odd and in 1..41");
  }
  const int fl = k / 2;
  const int ce = fl + 1;
  StruveDerivForm f{k, LaurentPoly(0), LaurentPoly(0), LaurentPoly(-1)};
  for (int nu = 0; nu <= ceil_half(fl - 1); ++nu) f.sigma0.add_term(2 * nu, sigma0_block(k, nu, ce));
  for (int nu = ceil_half(fl + 1); nu <= fl; ++nu) {
    f.sigma0.add_term(2 * nu, sigma0_block(k, nu, k - 1 - 2 * nu));
  }
  for (int nu = 0; nu <= ceil_half(fl); ++nu) f.sigma1.add_term(2 * nu, sigma1_block(k, nu, ce));
  for (int nu = 1 + ceil_half(fl); nu <= ce; ++nu) {
    f.sigma1.add_term(2 * nu, sigma1_block(k, nu, k + 1 - 2 * nu));
  }
  const Rational kf = factorial(k);
  // Kronecker-delta term, present because k is odd.
  const PiScaled d = rgamma_half(fl + 1) * rgamma_half(ce + 1);
  add_half_power(f.sigma2, k - 1, kf * signed_unit(fl + 1) * pow2(-2 * (fl + 1)) * d.rational_part(-2));
  for (int nu = 1; nu <= ceil_half(fl); ++nu) {
    add_half_power(f.sigma2, 2 * nu - 2,
                   kf / Rational(2) * frak_c(k, ce, nu) * reciprocal_factorial(nu));
  }
  for (int nu = 1 + ceil_half(fl); nu <= ce; ++nu) {
    add_half_power(f.sigma2, 2 * nu - 2,
                   kf / Rational(2) * sigma2_upper(k, k + 1 - 2 * nu, nu, k + 2 - 2 * nu, ce));
  }
  return f;
}

StruveDerivForm sigma_polys_4k1(int kappa) {
  if (kappa < 0 || 4 * kappa + 1 > kMaxStruveClosedOrder) {
    throw DomainError("sigma_polys_4k1: kappa must be in 0..10");
  }
  const int k = 4 * kappa + 1;
  StruveDerivForm f{k, LaurentPoly(0), LaurentPoly(0), LaurentPoly(-1)};
  for (int nu = 0; nu <= kappa; ++nu) {
    f.sigma0.add_term(2 * nu, sigma0_block(k, nu, 2 * kappa + 1));
    f.sigma1.add_term(2 * nu, sigma1_block(k, nu, 2 * kappa + 1));
  }
  for (int nu = kappa + 1; nu <= 2 * kappa; ++nu) {
    f.sigma0.add_term(2 * nu, sigma0_block(k, nu, k - 2 * nu));
    f.sigma1.add_term(2 * nu, sigma1_block(k, nu, k + 1 - 2 * nu));
  }
  const Rational half_kf = factorial(k) / Rational(2);
  for (int nu = 1; nu <= kappa; ++nu) {
    add_half_power(f.sigma2, 2 * nu - 2,
                   half_kf * frak_c(k, 2 * kappa + 1, nu) * reciprocal_factorial(nu));
  }
  for (int nu = kappa + 1; nu <= 2 * kappa; ++nu) {
    add_half_power(f.sigma2, 2 * nu - 2,
                   half_kf * sigma2_upper(k, k + 1 - 2 * nu, nu, k + 2 - 2 * nu, 2 * kappa));
  }
  return f;
}

LaurentPoly struve_remainder_poly(int k) {
  if (k < 1 || k > 60) throw DomainError("struve_remainder_poly: k must be in 1..60");
  LaurentPoly r(-1);
  const Rational kf = factorial(k);
  for (int j = 0; 2 * j <= k; ++j) {
    Rational inner;
    for (int i = 0; i <= j; ++i) {
      const PiScaled g = rgamma_half(i - j);
      inner += pow2(-(2 * i + 1)) * reciprocal_factorial(i) * reciprocal_factorial(k - 2 * i) *
               g.rational_part(-1);
    }
    const Rational outer = rgamma_half(k + 1 - j).rational_part(-1);
    add_half_power(r, k - 1 - 2 * j, -kf * signed_unit(j) * outer * inner);
  }
  return r;
}

LaurentPoly struve_remainder_poly_uncancelled(int k) {
  if (k < 0 || k > 60) throw DomainError("struve_remainder_poly_uncancelled: k must be in 0..60");
  const Rational two_kf = Rational(2) * factorial(k);
  LaurentPoly r = LaurentPoly::monomial(two_kf, -(k + 1), -1);
  for (int i = 0; 2 * i <= k; ++i) {
    Rational c = -two_kf * signed_unit(k) * reciprocal_factorial(i) *
                 reciprocal_factorial(k - 2 * i) * pow2(-(i + 1));
    r += neg_order_tail_poly(k + 1 - i).shifted(-(i + 1)) * c;
  }
  return r;
}

namespace {

StruveDerivForm compose(int k) {
  StruveDerivForm f{k, LaurentPoly(0), LaurentPoly(0), LaurentPoly(-1)};
  if (k == 0) {
    f.sigma1 = LaurentPoly::constant(Rational(1, 2));
    return f;
  }
  // The H_nu prefactors are the Bessel ones: sigma1 (2/z)^(k+1) = p1 and
  // sigma0 (2/z)^k = -p0.
  const BesselDerivForm& p = p_polys(k);
  f.sigma1 = p.p1.times_power(Rational(1, 2), k + 1);
  f.sigma0 = -p.p0.times_power(Rational(1, 2), k);
  LaurentPoly rest = struve_remainder_poly(k);
  const Rational two_kf = Rational(2) * factorial(k);
  for (int i = 0; 2 * i <= k; ++i) {
    Rational c = two_kf * signed_unit(i) * reciprocal_factorial(i) *
                 reciprocal_factorial(k - 2 * i) * pow2(-(i + 1));
    rest += s_part(k + 1 - i).shifted(-(i + 1)) * c;
  }
  f.sigma2 = rest.times_power(Rational(1, 2), k - 1);
  return f;
}

struct Compiled {
  CompiledPoly q0;
  CompiledPoly q1;
  CompiledPoly q2;
  int terms = 0;
};

const Compiled& compiled(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Compiled>> cache;
  const StruveDerivForm& f = sigma_polys_composed(k);
  const std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    const Rational half(1, 2);
    const LaurentPoly q0 = f.sigma0.times_power(half, -k);
    const LaurentPoly q1 = f.sigma1.times_power(half, -(k + 1));
    const LaurentPoly q2 = f.sigma2.times_power(half, -(k - 1));
    slot = std::make_unique<Compiled>(
        Compiled{q0.compile(), q1.compile(), q2.compile(),
                 static_cast<int>(q0.terms().size() + q1.terms().size() + q2.terms().size())});
  }
  return *slot;
}

std::optional<detail::ClosedFormValue> closed_value(int k, double z) {
  if (k > kMaxStruveClosedOrder) return std::nullopt;
  const Compiled& c = compiled(k);
  const PolyValue q0 = c.q0.evaluate(z);
  const PolyValue q1 = c.q1.evaluate(z);
  const PolyValue q2 = c.q2.evaluate(z);
  const BaseFnValue h0 = struve_h0(z);
  const BaseFnValue h1 = struve_h1(z);
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  detail::ClosedFormValue out;
  out.value = sign * (q0.value * h0.value + q1.value * h1.value + q2.value);
  out.abs_sum = q0.abs_sum * std::fabs(h0.value) + q1.abs_sum * std::fabs(h1.value) + q2.abs_sum;
  out.abs_err_estimate = (4 + c.terms) * DBL_EPSILON * out.abs_sum +
                         q0.abs_sum * h0.abs_err_estimate + q1.abs_sum * h1.abs_err_estimate;
  out.terms = c.terms;
  return out;
}

}  // namespace

const StruveDerivForm& sigma_polys_composed(int k) {
  if (k < 0 || k > kMaxStruveClosedOrder) throw DomainError("sigma_polys_composed: k must be in 0..41");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<StruveDerivForm>> cache;
  {
    const std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end() && it->second) return *it->second;
  }
  // Built outside the lock: compose() takes the p_polys lock.
  auto built = std::make_unique<StruveDerivForm>(compose(k));
  const std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::move(built);
  return *slot;
}

EvalResult deriv_h1z(int k, double z, const EvalConfig& cfg) {
  if (k < 0 || k > kMaxDerivOrder) throw DomainError("deriv_h1z: k must be in 0..120");
  return detail::evaluate_derivative(KernelKind::struve, k, z, cfg,
                                     [k](double x) { return closed_value(k, x); });
}

double deriv_h1z_at_zero(int k) {
  if (k < 0 || k > 200) throw DomainError("deriv_h1z_at_zero: k must be in 0..200");
  if (k % 2 == 0) return 0.0;
  const int m = (k - 1) / 2;
  // m! / (2 sqrt(pi) Gamma(m+5/2)) = rational / pi.
  Rational v = factorial(m) * rgamma_half(m + 2).rational_part(-1) / Rational(2);
  if (m % 2 != 0) v = -v;
  return v.to_double() / std::numbers::pi;
}

}  // namespace besstruve
