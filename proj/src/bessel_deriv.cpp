#include "besstruve/bessel_deriv.hpp"

#include "besstruve/basefn.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/exact_gamma.hpp"
#include "besstruve/lommel.hpp"
#include "deriv_eval.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace besstruve {

namespace {

void check_closed_order(int k) {
  if (k < 0 || k > kMaxBesselClosedOrder) throw DomainError("p_polys: k must be in 0..60");
}

template <typename R1, typename R0>
BesselDerivForm assemble(int k, R1 r1, R0 r0) {
  BesselDerivForm f{k, {}, {}};
  const Rational two_kfact = Rational(2) * factorial(k);
  for (int i = 0; 2 * i <= k; ++i) {
    const int nu = k + 1 - i;
    Rational c = two_kfact * reciprocal_factorial(i) * reciprocal_factorial(k - 2 * i) * pow2(-(i + 1));
    if (i % 2 != 0) c = -c;
    f.p1 += r1(nu).shifted(-(i + 1)) * c;
    f.p0 += r0(nu).shifted(-(i + 1)) * c;
  }
  return f;
}

struct Compiled {
  CompiledPoly p1;
  CompiledPoly p0;
  int terms = 0;
};

const Compiled& compiled(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Compiled>> cache;
  const BesselDerivForm& f = p_polys(k);
  const std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    slot = std::make_unique<Compiled>(Compiled{
        f.p1.compile(), f.p0.compile(), static_cast<int>(f.p1.terms().size() + f.p0.terms().size())});
  }
  return *slot;
}

std::optional<detail::ClosedFormValue> closed_value(int k, double z) {
  if (k > kMaxBesselClosedOrder) return std::nullopt;
  const Compiled& c = compiled(k);
  const PolyValue p1 = c.p1.evaluate(z);
  const PolyValue p0 = c.p0.evaluate(z);
  const BaseFnValue j1 = bessel_j1(z);
  const BaseFnValue j0 = bessel_j0(z);
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  detail::ClosedFormValue out;
  out.value = sign * (p1.value * j1.value - p0.value * j0.value);
  out.abs_sum = p1.abs_sum * std::fabs(j1.value) + p0.abs_sum * std::fabs(j0.value);
  out.abs_err_estimate = (4 + c.terms) * DBL_EPSILON * out.abs_sum +
                         p1.abs_sum * j1.abs_err_estimate + p0.abs_sum * j0.abs_err_estimate;
  out.terms = c.terms;
  return out;
}

}  // namespace

const BesselDerivForm& p_polys(int k) {
  check_closed_order(k);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BesselDerivForm>> cache;
  const std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    slot = std::make_unique<BesselDerivForm>(
        assemble(k, [](int nu) { return c_poly(nu - 1, nu); }, [](int nu) { return c_poly(nu - 2, nu); }));
  }
  return *slot;
}

BesselDerivForm p_polys_closed_form(int k) {
  check_closed_order(k);
  return assemble(k, [](int nu) { return r1_poly(nu); },
                  [](int nu) { return nu >= 2 ? r0_poly(nu) : LaurentPoly(); });
}

EvalResult deriv_j1z(int k, double z, const EvalConfig& cfg) {
  if (k < 0 || k > kMaxDerivOrder) throw DomainError("deriv_j1z: k must be in 0..120");
  return detail::evaluate_derivative(KernelKind::bessel, k, z, cfg,
                                     [k](double x) { return closed_value(k, x); });
}

double deriv_j1z_at_zero(int k) {
  if (k < 0 || k > 200) throw DomainError("deriv_j1z_at_zero: k must be in 0..200");
  if (k % 2 != 0) return 0.0;
  const int m = k / 2;
  // Gamma(m+1/2)/sqrt(pi) is rational.
  Rational v = gamma_half(m).rational_part(1) * reciprocal_factorial(m + 1) / Rational(2);
  if (m % 2 != 0) v = -v;
  return v.to_double();
}

}  // namespace besstruve
