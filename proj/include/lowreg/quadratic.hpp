#pragma once

#include "lowreg/field.hpp"
#include "lowreg/fixed_point.hpp"
#include "lowreg/operators.hpp"

namespace lowreg {

// One-step maps for i w_t = -w_xx + eps N(w) with N(w) = w^2 or |w|^2.

enum class QuadNonlinearity { Square, ModulusSquare };

struct QuadSchemeConfig {
  double eps = 1.0;
  /// Step size. Negative values give the backward map Phi_{-tau}.
  double tau = 0.1;
  QuadNonlinearity nonlinearity = QuadNonlinearity::Square;
  double fp_tol = 1e-12;
  int fp_max_iter = 100;
  /// 2/3-rule truncation of every nonlinear product (diagnostic switch).
  bool dealias = false;

  /// Throws ArgumentError on eps outside (0, 1], tau zero or non-finite,
  /// fp_tol <= 0 or fp_max_iter < 1.
  void validate() const;
};

/// LI1 for N(w) = w^2:
///   (1 - 2 i eps tau w_0) e^{i tau d_xx} w + i eps tau w_0^2
///   + eps/2 [ (e^{i tau d_xx} d_x^{-1} w)^2 - e^{i tau d_xx} (d_x^{-1} w)^2 ].
SpectralField li1_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                       const OperatorSymbols& ops);

/// First-order scheme for N(w) = |w|^2. The zero-set contribution is
/// -i eps tau (conj(w_0) e^{i tau d_xx} w + ||w||^2 - |w_0|^2); the last
/// term removes the doubly counted (l_1, l) = (0, 0) pair.
SpectralField li1_conj_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                            const OperatorSymbols& ops);

/// Symmetric second-order SLI2 for N(w) = w^2 (implicit; Picard iteration
/// started from li1_step). Throws SolverFailure on non-convergence.
SpectralField sli2_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                        const OperatorSymbols& ops, SolveStats* stats = nullptr);

/// Symmetric second-order scheme for N(w) = |w|^2: trapezoidal average of
/// the li1_conj_step integral at w^n and w^{n+1}.
SpectralField sli2_conj_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                             const OperatorSymbols& ops, SolveStats* stats = nullptr);

} // namespace lowreg
