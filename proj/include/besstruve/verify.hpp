#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace besstruve {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// A known discrepancy in the reference data; reported, never a failure.
  bool flagged = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Suite names accepted by run_verify besides "all".
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all". `integral_tol` is the allowed
/// absolute difference between the series and the quadrature of the
/// defining integrals. Throws DomainError for an unknown suite.
std::vector<SuiteReport> run_verify(std::string_view suite, double integral_tol = 1e-8);

nlohmann::ordered_json to_json(const std::vector<SuiteReport>& reports);

}  // namespace besstruve
