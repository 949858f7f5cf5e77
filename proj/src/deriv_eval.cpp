#include "deriv_eval.hpp"

#include "besstruve/basefn.hpp"
#include "besstruve/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace besstruve::detail {

namespace {

constexpr int kTaylorTermLimit = 200;

std::optional<EvalResult> try_taylor(KernelKind kind, int k, double z, const EvalConfig& cfg) {
  if (std::fabs(z) > 2) return std::nullopt;
  const int nterms = std::min(cfg.max_terms, kTaylorTermLimit);
  const TaylorValue t = taylor_deriv_detail(kind, k, z, nterms);
  const double err = t.first_omitted + 4 * DBL_EPSILON * t.max_term;
  if (!(err <= cfg.abs_tol)) return std::nullopt;
  return EvalResult{t.value, err, nterms, EvalPath::taylor};
}

EvalResult quadrature(KernelKind kind, int k, double z, const EvalConfig& cfg) {
  const double target = std::clamp(cfg.abs_tol / 4, 1e-16, 1e-3);
  const QuadratureOutcome q = quad_deriv_kernel_detail(kind, k, z, QuadratureRule{1, 32, target});
  const double err = q.last_change + 16 * DBL_EPSILON * q.abs_integral;
  if (!(err <= cfg.abs_tol)) {
    throw ConvergenceError("derivative: no evaluation path reached the requested tolerance");
  }
  return {q.value, err, q.panels * 32, EvalPath::quadrature};
}

}  // namespace

EvalResult evaluate_derivative(KernelKind kind, int k, double z, const EvalConfig& cfg,
                               const std::function<std::optional<ClosedFormValue>(double)>& closed) {
  validate(cfg);
  if (!std::isfinite(z) || std::fabs(z) > kMaxArgument) {
    throw DomainError("derivative: |z| must be finite and <= 50");
  }
  if (std::fabs(z) < cfg.small_z_threshold || z == 0) {
    if (auto r = try_taylor(kind, k, z, cfg)) return *r;
  } else if (closed) {
    if (const auto c = closed(z)) {
      const double ratio = c->abs_sum == 0 ? 1.0 : c->abs_sum / std::fabs(c->value);
      if (ratio <= cfg.cancellation_guard && c->abs_err_estimate <= cfg.abs_tol) {
        return {c->value, c->abs_err_estimate, c->terms, EvalPath::closed_form};
      }
    }
  }
  return quadrature(kind, k, z, cfg);
}

}  // namespace besstruve::detail
