#pragma once

#include <span>
#include <vector>

#include "lowreg/field.hpp"

namespace lowreg {

/// phi1(z) = (e^z - 1)/z with phi1(0) = 1.
///
/// Uses the series 1 + z/2 + z^2/6 + z^3/24 for |z| < kPhi1SeriesCutoff and
/// an expm1-based numerator above it, so there is no cancellation near 0.
cplx phi1(cplx z) noexcept;
inline constexpr double kPhi1SeriesCutoff = 1e-6;

/// e^z - 1 without cancellation for small |z|.
cplx complex_expm1(cplx z) noexcept;

/// Per-mode Fourier multipliers for a fixed step tau.
///
/// Symbol convention: e^{i t d_xx} acts on mode l as e^{-i t l^2}.
class OperatorSymbols {
public:
  OperatorSymbols(TorusGrid grid, double tau);

  const TorusGrid& grid() const noexcept { return grid_; }
  double tau() const noexcept { return tau_; }

  /// e^{-i tau l^2}
  std::span<const cplx> prop() const noexcept { return prop_; }
  /// e^{+i tau l^2}, the inverse propagator.
  std::span<const cplx> prop_inv() const noexcept { return prop_inv_; }
  /// 1/(i l), 0 at l = 0.
  std::span<const cplx> inv_dx() const noexcept { return inv_dx_; }
  /// phi1(2 i tau l^2), the symbol of phi1(-2 i tau d_xx).
  std::span<const cplx> phi1_2() const noexcept { return phi1_2_; }
  /// phi1(i tau l^2), the symbol of phi1(-i tau d_xx).
  std::span<const cplx> phi1_1() const noexcept { return phi1_1_; }
  /// phi1(-i tau l^2), the symbol of phi1(i tau d_xx).
  std::span<const cplx> phi1_1c() const noexcept { return phi1_1c_; }
  /// 1 - phi1(2 i tau l^2)
  std::span<const cplx> one_minus_phi1_2() const noexcept { return one_minus_phi1_2_; }
  /// 1 - phi1(i tau l^2)
  std::span<const cplx> one_minus_phi1_1() const noexcept { return one_minus_phi1_1_; }
  /// 1 - phi1(-i tau l^2)
  std::span<const cplx> one_minus_phi1_1c() const noexcept { return one_minus_phi1_1c_; }

private:
  TorusGrid grid_;
  double tau_;
  std::vector<cplx> prop_, prop_inv_, inv_dx_, phi1_2_, phi1_1_, phi1_1c_;
  std::vector<cplx> one_minus_phi1_2_, one_minus_phi1_1_, one_minus_phi1_1c_;
};

/// Throws ArgumentError when the symbol table does not fit (grid, tau).
void require_symbols(const OperatorSymbols& ops, const TorusGrid& grid, double tau,
                     const char* context);

/// coeffs[l] *= symbol[l] (symbol in ascending mode order).
SpectralField apply_multiplier(const SpectralField& field, std::span<const cplx> symbol);

/// e^{i t d_xx}: coefficient l picks up e^{-i t l^2}.
SpectralField free_propagate(const SpectralField& field, double t);

/// Regularised inverse derivative: 1/(i l) off the zero mode, 0 on it.
SpectralField antiderivative(const SpectralField& field);

/// d_x: multiplies coefficient l by i l.
SpectralField derivative(const SpectralField& field);

/// phi1(a d_xx): coefficient l picks up phi1(-a l^2).
SpectralField apply_phi1_laplacian(const SpectralField& field, cplx a);

/// Pointwise complex conjugate: (conj f)_l = conj(f_{-l}), with the
/// Nyquist mode -N/2 mapped to itself as on the collocation grid.
SpectralField conjugate(const SpectralField& field);

/// 2/3-rule truncation: zero every mode with |l| > N/3.
SpectralField truncate_two_thirds(const SpectralField& field);

} // namespace lowreg
