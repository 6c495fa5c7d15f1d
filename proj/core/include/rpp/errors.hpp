#pragma once

#include <stdexcept>
#include <string>

namespace rpp {

/// Bad argument values (out-of-range sizes, weights, probabilities, ...).
class InvalidParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical routine failed to converge.
class NumericalFailureError : public std::runtime_error {
public:
  NumericalFailureError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  explicit NumericalFailureError(const std::string& what)
      : std::runtime_error(what), residual_(0.0) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// A structural network assumption (stochasticity, common spanning-tree root,
/// spectral contraction) does not hold for the given inputs.
class AssumptionViolationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A documented hypothesis of an analysis formula was violated by the caller.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A simulation trial produced non-finite state (or a degenerate push-sum
/// weight) and cannot continue.
class TrialAbortError : public std::runtime_error {
public:
  TrialAbortError(const std::string& what, long iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  long iteration() const noexcept { return iteration_; }

private:
  long iteration_;
};

/// File output failure; carries the offending path in the message.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rpp
