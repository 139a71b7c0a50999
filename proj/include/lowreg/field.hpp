#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lowreg/grid.hpp"

namespace lowreg {

using cplx = std::complex<double>;

/// Complex field on the torus stored as Fourier coefficients.
///
/// Coefficients follow f(x_j) = sum_l f_l e^{i l x_j}, i.e. the forward
/// transform carries the 1/N factor and coeff(0) is the grid mean.
class SpectralField {
public:
  /// Zero field.
  explicit SpectralField(TorusGrid grid);
  /// Throws ArgumentError if coeffs.size() != grid.n_modes().
  SpectralField(TorusGrid grid, std::vector<cplx> coeffs);

  const TorusGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }

  /// Coefficient of wavenumber l; l must lie in the grid's mode range.
  cplx coeff(int l) const noexcept { return coeffs_[grid_.index(l)]; }
  cplx& coeff(int l) noexcept { return coeffs_[grid_.index(l)]; }
  cplx zero_mode() const noexcept { return coeff(0); }

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(cplx s) noexcept;

  bool operator==(const SpectralField&) const = default;

private:
  TorusGrid grid_;
  std::vector<cplx> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(cplx s, SpectralField a);

/// Throws ArgumentError naming `context` when the grids differ.
void require_same_grid(const TorusGrid& a, const TorusGrid& b, const char* context);

} // namespace lowreg
