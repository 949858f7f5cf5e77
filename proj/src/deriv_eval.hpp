#pragma once

// Path selection shared by the two derivative families.

#include "besstruve/eval.hpp"
#include "besstruve/oracle.hpp"

#include <functional>
#include <optional>

namespace besstruve::detail {

struct ClosedFormValue {
  double value = 0.0;
  /// Sum of the magnitudes of the individual products.
  double abs_sum = 0.0;
  double abs_err_estimate = 0.0;
  int terms = 0;
};

/// Taylor below cfg.small_z_threshold, then the closed form (when `closed`
/// is set) unless it cancels beyond cfg.cancellation_guard or misses
/// cfg.abs_tol, then quadrature of the differentiated kernel.
EvalResult evaluate_derivative(KernelKind kind, int k, double z, const EvalConfig& cfg,
                               const std::function<std::optional<ClosedFormValue>(double)>& closed);

}  // namespace besstruve::detail
