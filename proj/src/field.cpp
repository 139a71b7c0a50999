#include "lowreg/field.hpp"

#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {

SpectralField::SpectralField(TorusGrid grid)
    : grid_(grid), coeffs_(grid.n_modes(), cplx{0.0, 0.0}) {}

SpectralField::SpectralField(TorusGrid grid, std::vector<cplx> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.n_modes()) {
    throw ArgumentError("SpectralField: expected " +
                        std::to_string(grid_.n_modes()) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField::operator+=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField::operator-=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

SpectralField& SpectralField::operator*=(cplx s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(cplx s, SpectralField a) { return a *= s; }

void require_same_grid(const TorusGrid& a, const TorusGrid& b, const char* context) {
  if (!(a == b)) {
    throw ArgumentError(std::string(context) + ": grid mismatch (" +
                        std::to_string(a.n_modes()) + " vs " +
                        std::to_string(b.n_modes()) + " modes)");
  }
}

} // namespace lowreg
