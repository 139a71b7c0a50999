#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "lowreg/errors.hpp"
#include "lowreg/field.hpp"
#include "lowreg/norms.hpp"

namespace lowreg {

struct SolveStats {
  int iterations = 0;
  double residual = 0.0;
};

/// Picard iteration y <- map(y) until ||y_{k+1} - y_k||_1 <= tol.
/// Throws SolverFailure carrying the last residual after max_iter sweeps.
template <class Map>
SpectralField solve_fixed_point(SpectralField guess, Map&& map, double tol, int max_iter,
                                const char* name, SolveStats* stats = nullptr) {
  double residual = 0.0;
  for (int k = 1; k <= max_iter; ++k) {
    SpectralField next = map(guess);
    residual = sobolev_distance(next, guess, 1.0);
    guess = std::move(next);
    if (residual <= tol) {
      if (stats) *stats = {k, residual};
      return guess;
    }
    if (!std::isfinite(residual)) {
      throw SolverFailure(std::string(name) + ": fixed-point iteration diverged",
                          residual, k);
    }
  }
  throw SolverFailure(std::string(name) + ": no convergence after " +
                          std::to_string(max_iter) + " iterations (residual " +
                          std::to_string(residual) + ")",
                      residual, max_iter);
}

} // namespace lowreg
