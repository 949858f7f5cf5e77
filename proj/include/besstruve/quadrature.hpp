#pragma once

#include <functional>
#include <span>

namespace besstruve {

/// Composite Gauss-Legendre rule on [a, b]: `panels` equal panels with
/// `nodes_per_panel` nodes each. Refinement doubles the panel count.
struct QuadratureRule {
  int panels = 1;
  int nodes_per_panel = 32;  // 16, 32 or 64
  double target_tol = 1e-13;
};

struct QuadratureOutcome {
  double value = 0.0;
  /// |I(2n panels) - I(n panels)| at the accepted refinement.
  double last_change = 0.0;
  /// Integral of |f| at the accepted refinement (rounding scale).
  double abs_integral = 0.0;
  int panels = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1] for n in {16, 32, 64}.
struct GaussLegendre {
  std::span<const double> nodes;
  std::span<const double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Single evaluation of the composite rule (no refinement).
QuadratureOutcome integrate_fixed(const std::function<double(double)>& f, double a, double b,
                                  int panels, int nodes_per_panel);

/// Doubles panels starting from `rule.panels` until successive values differ
/// by less than rule.target_tol, or by less than the rounding floor
/// 16 eps * integral |f| when that is larger. Throws ConvergenceError after
/// 20 refinements.
QuadratureOutcome integrate_refined(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureRule& rule);

}  // namespace besstruve
