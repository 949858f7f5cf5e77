#include "besstruve/integrals.hpp"

#include "besstruve/basefn.hpp"
#include "besstruve/bessel_deriv.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/struve_deriv.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

namespace besstruve {

double truncation_bound(int k) {
  if (k < 0 || k > 300) throw DomainError("truncation_bound: k must be in 0..300");
  const double lg = std::lgamma((k + 1) / 2.0) - std::lgamma(k / 2.0 + 2);
  return std::exp(lg) / (2 * std::sqrt(std::numbers::pi));
}

namespace {

struct Plan {
  double z = 0;
  double zeta = 0;
  double sign = 1;
  int nterms = 0;
  double tail = 0;
};

int power_of(IntegralKind kind, int kappa) { return kind == IntegralKind::s ? 2 * kappa + 1 : 2 * kappa; }
int order_of(IntegralKind kind, int kappa) { return kind == IntegralKind::s ? 4 * kappa + 3 : 4 * kappa + 1; }

// (pi/2) zeta^p / p!
double weight(double zeta, int p) {
  double w = std::numbers::pi / 2;
  for (int i = 1; i <= p; ++i) w *= zeta / i;
  return w;
}

Plan make_plan(IntegralKind kind, const IntegralRequest& req) {
  validate(req.cfg);
  if (!std::isfinite(req.z) || !std::isfinite(req.zeta) || std::fabs(req.z) > kMaxArgument ||
      std::fabs(req.zeta) > kMaxArgument) {
    throw DomainError("integral: |z| and |zeta| must be finite and <= 50");
  }
  Plan plan;
  plan.z = std::fabs(req.z);
  plan.zeta = std::fabs(req.zeta);
  if (kind == IntegralKind::s) {
    // Odd in both arguments.
    if (req.z < 0) plan.sign = -plan.sign;
    if (req.zeta < 0) plan.sign = -plan.sign;
    if (plan.z == 0 || plan.zeta == 0) return plan;
  }
  // Smallest term count whose tail bound meets half the tolerance. Both the
  // weights' ratio and the derivative bound decrease with kappa, so the
  // tail after n terms is at most w_n tb_n / (1 - r_n) once r_n < 1.
  for (int n = 0; n <= kMaxKappa + 1; ++n) {
    const int p = power_of(kind, n);
    const double ratio = plan.zeta * plan.zeta / ((p + 1.0) * (p + 2.0));
    if (ratio < 1) {
      const double tail = weight(plan.zeta, p) * truncation_bound(order_of(kind, n)) / (1 - ratio);
      if (tail < req.cfg.abs_tol / 2) {
        plan.nterms = n;
        plan.tail = tail;
        return plan;
      }
    }
  }
  throw ConvergenceError("integral: series needs more than 26 terms for this zeta");
}

std::vector<SeriesTerm> evaluate_terms(IntegralKind kind, const Plan& plan, const EvalConfig& cfg) {
  std::vector<SeriesTerm> terms;
  terms.reserve(static_cast<std::size_t>(plan.nterms));
  for (int kappa = 0; kappa < plan.nterms; ++kappa) {
    SeriesTerm t;
    t.kappa = kappa;
    t.order = order_of(kind, kappa);
    t.weight = weight(plan.zeta, power_of(kind, kappa));
    EvalConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / (2.0 * plan.nterms * std::max(t.weight, 1e-300));
    t.derivative = kind == IntegralKind::s ? deriv_j1z(t.order, plan.z, inner)
                                           : deriv_h1z(t.order, plan.z, inner);
    t.term = (kappa % 2 == 0 ? 1.0 : -1.0) * t.weight * t.derivative.value;
    terms.push_back(t);
  }
  return terms;
}

EvalResult integral(IntegralKind kind, const IntegralRequest& req) {
  const Plan plan = make_plan(kind, req);
  EvalResult r;
  if (plan.nterms == 0) return r;
  const std::vector<SeriesTerm> terms = evaluate_terms(kind, plan, req.cfg);
  // Compensated sum in kappa order.
  double sum = 0;
  double comp = 0;
  double abs_sum = 0;
  double err = plan.tail;
  for (const SeriesTerm& t : terms) {
    const double x = t.term;
    const double s = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - s) + x : (x - s) + sum;
    sum = s;
    abs_sum += std::fabs(x);
    err += t.weight * t.derivative.abs_err_estimate;
    r.path = worst_path(r.path, t.derivative.path);
  }
  r.value = plan.sign * (sum + comp);
  r.abs_err_estimate = err + 2 * DBL_EPSILON * abs_sum;
  r.terms_used = plan.nterms;
  return r;
}

}  // namespace

EvalResult s_integral(const IntegralRequest& req) { return integral(IntegralKind::s, req); }

EvalResult c_integral(const IntegralRequest& req) { return integral(IntegralKind::c, req); }

std::vector<SeriesTerm> integral_terms(IntegralKind kind, const IntegralRequest& req) {
  const Plan plan = make_plan(kind, req);
  return evaluate_terms(kind, plan, req.cfg);
}

}  // namespace besstruve
