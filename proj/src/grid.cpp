#include "lowreg/grid.hpp"

#include <numbers>
#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {

TorusGrid::TorusGrid(std::size_t n_modes) : n_(n_modes) {
  if (n_modes < 4 || n_modes % 2 != 0) {
    throw ArgumentError("TorusGrid: n_modes must be even and >= 4, got " +
                        std::to_string(n_modes));
  }
}

int TorusGrid::wrap(long l) const noexcept {
  const long n = static_cast<long>(n_);
  long r = (l - min_mode()) % n;
  if (r < 0) r += n;
  return static_cast<int>(r + min_mode());
}

double TorusGrid::point(std::size_t j) const noexcept {
  return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(n_);
}

std::vector<double> TorusGrid::points() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = point(j);
  return x;
}

std::vector<int> TorusGrid::modes() const {
  std::vector<int> l(n_);
  for (std::size_t k = 0; k < n_; ++k) l[k] = mode(k);
  return l;
}

} // namespace lowreg
