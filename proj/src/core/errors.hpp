#pragma once

#include <stdexcept>
#include <string>

namespace abflux {

/// Input outside the mathematical or physical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative method (root bracketing, quadrature, shooting) failed to
/// converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abflux
