#pragma once

#include <stdexcept>
#include <string>

namespace lowreg {

/// Invalid input: length mismatch, grid mismatch, out-of-range parameter.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-point iteration of an implicit step did not reach its tolerance.
class SolverFailure : public std::runtime_error {
public:
  SolverFailure(const std::string& what, double residual, int iterations,
                long step = -1)
      : std::runtime_error(what), residual_(residual),
        iterations_(iterations), step_(step) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }
  /// Trajectory step index, or -1 when raised outside a trajectory.
  long step() const noexcept { return step_; }

  SolverFailure at_step(long step) const;

private:
  double residual_;
  int iterations_;
  long step_;
};

inline SolverFailure SolverFailure::at_step(long step) const {
  return SolverFailure("step " + std::to_string(step) + ": " + what(),
                       residual_, iterations_, step);
}

} // namespace lowreg
