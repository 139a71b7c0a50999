#include "lowreg/random_data.hpp"

#include <cmath>
#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {

SpectralField random_initial_data(const TorusGrid& grid, double theta, std::uint64_t seed) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw ArgumentError("random_initial_data: theta must be >= 0, got " +
                        std::to_string(theta));
  }
  SplitMix64 rng(seed);
  SpectralField out(grid);
  for (int l = grid.min_mode(); l <= grid.max_mode(); ++l) {
    const double re = rng.uniform();
    const double im = rng.uniform();
    const double bracket = l == 0 ? 1.0 : std::abs(static_cast<double>(l));
    out.coeff(l) = std::pow(bracket, -theta) * cplx{re, im};
  }
  return out;
}

} // namespace lowreg
