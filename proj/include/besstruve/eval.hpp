#pragma once

#include <string_view>

namespace besstruve {

struct EvalConfig {
  double abs_tol = 1e-10;
  /// Below this |z| derivatives come from the differentiated power series.
  double small_z_threshold = 0.5;
  /// A closed-form result is rejected when the sum of its term magnitudes
  /// exceeds this multiple of the result.
  double cancellation_guard = 1e12;
  /// Term cap for the power-series path.
  int max_terms = 60;
};

/// Throws DomainError unless every field is positive and finite and
/// cancellation_guard > 1.
void validate(const EvalConfig& cfg);

enum class EvalPath { closed_form, taylor, quadrature };

std::string_view to_string(EvalPath p);

/// The less trusted of two paths, ordered closed_form < taylor < quadrature.
EvalPath worst_path(EvalPath a, EvalPath b);

struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  int terms_used = 0;
  EvalPath path = EvalPath::closed_form;
};

}  // namespace besstruve
