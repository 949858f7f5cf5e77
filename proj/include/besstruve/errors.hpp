#pragma once

#include <stdexcept>
#include <string>

namespace besstruve {

/// Argument outside the supported domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// No evaluation path reached the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace besstruve
