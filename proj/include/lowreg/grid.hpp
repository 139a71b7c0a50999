#pragma once

#include <cstddef>
#include <vector>

namespace lowreg {

/// Uniform periodic grid on the torus (-pi, pi).
///
/// Holds N collocation points x_j = -pi + 2 pi j / N and the matching
/// integer wavenumbers l = -N/2, ..., N/2 - 1. Coefficient arrays are
/// always stored in ascending l, so storage index k holds mode k - N/2.
class TorusGrid {
public:
  /// Throws ArgumentError unless n_modes is even and at least 4.
  explicit TorusGrid(std::size_t n_modes);

  std::size_t n_modes() const noexcept { return n_; }
  int min_mode() const noexcept { return -static_cast<int>(n_ / 2); }
  int max_mode() const noexcept { return static_cast<int>(n_ / 2) - 1; }

  bool contains(int l) const noexcept { return l >= min_mode() && l <= max_mode(); }
  std::size_t index(int l) const noexcept {
    return static_cast<std::size_t>(l - min_mode());
  }
  int mode(std::size_t k) const noexcept {
    return static_cast<int>(k) + min_mode();
  }
  /// Reduces any integer wavenumber to its alias in [-N/2, N/2 - 1].
  int wrap(long l) const noexcept;

  double point(std::size_t j) const noexcept;
  std::vector<double> points() const;
  std::vector<int> modes() const;

  bool operator==(const TorusGrid&) const = default;

private:
  std::size_t n_;
};

} // namespace lowreg
