#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ngrad {

/// A caller broke an operation's precondition (dimension mismatch, bad weight,
/// non-unit loss vector, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A learner was handed to a driver that cannot run it.
class WrongDriver : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// Quantity is undefined at the requested point, e.g. the local Hölder
/// constant at a minimizer.
class DegeneratePoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A non-finite value showed up during a run.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what, std::size_t step = 0)
      : std::runtime_error(step == 0 ? what : what + " at step " + std::to_string(step)),
        step_(step) {}

  /// 1-based step index, or 0 when raised outside a driver loop.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace ngrad
