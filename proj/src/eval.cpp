#include "besstruve/eval.hpp"

#include "besstruve/errors.hpp"

#include <cmath>

namespace besstruve {

void validate(const EvalConfig& cfg) {
  auto positive = [](double x) { return std::isfinite(x) && x > 0; };
  if (!positive(cfg.abs_tol)) throw DomainError("abs_tol must be positive and finite");
  if (!positive(cfg.small_z_threshold)) {
    throw DomainError("small_z_threshold must be positive and finite");
  }
  if (!std::isfinite(cfg.cancellation_guard) || !(cfg.cancellation_guard > 1)) {
    throw DomainError("cancellation_guard must be finite and > 1");
  }
  if (cfg.max_terms <= 0) throw DomainError("max_terms must be positive");
}

std::string_view to_string(EvalPath p) {
  switch (p) {
    case EvalPath::closed_form: return "closed_form";
    case EvalPath::taylor: return "taylor";
    case EvalPath::quadrature: return "quadrature";
  }
  return "unknown";
}

EvalPath worst_path(EvalPath a, EvalPath b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

}  // namespace besstruve
