#pragma once

#include <stdexcept>
#include <string>

namespace blobmkt {

/// Bad inputs: non-finite numbers, violated preconditions, malformed files.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A modeled economic condition prevents an answer (as opposed to a bug).
class EconomicError : public std::runtime_error {
 public:
  explicit EconomicError(const std::string& what) : std::runtime_error(what) {}
};

/// Clearing price requested for an empty participant set.
class EmptyParticipationError : public EconomicError {
 public:
  explicit EmptyParticipationError(const std::string& what) : EconomicError(what) {}
};

/// Capped blob supply exceeds the protocol target at every price.
class InfeasibleTargetError : public EconomicError {
 public:
  explicit InfeasibleTargetError(const std::string& what) : EconomicError(what) {}
};

/// An iterative solver failed to converge.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A configuration cannot be simulated (for example a zero posting interval).
class SimulationError : public ValidationError {
 public:
  explicit SimulationError(const std::string& what) : ValidationError(what) {}
};

}  // namespace blobmkt
