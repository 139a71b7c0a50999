#pragma once

#include <span>

#include "lowreg/field.hpp"
#include "lowreg/fixed_point.hpp"
#include "lowreg/operators.hpp"

namespace lowreg {

// One-step maps for i w_t = -w_xx + eps^2 |w|^2 w.

enum class CubicScheme { NRLI1, NRSLI2, OS18, Strang };

/// Multipliers used for g and h inside NRSLI2.
///  HalfStep: 1 - phi1(i tau l^2) on w^n and 1 - phi1(-i tau l^2) on
///            w^{n+1}, as produced by composing the half steps. Symmetric.
///  FullStep: 1 - phi1(2 i tau l^2) on both. Not symmetric; kept for
///            comparison only.
enum class ResonantWeights { HalfStep, FullStep };

struct CubicSchemeConfig {
  double eps = 1.0;
  double tau = 0.1;
  CubicScheme scheme = CubicScheme::NRLI1;
  double fp_tol = 1e-12;
  int fp_max_iter = 100;
  bool dealias = false;
  ResonantWeights nrsli2_weights = ResonantWeights::HalfStep;

  void validate() const;
};

/// Resonance structure of the cubic interaction l = -l1 + l2 + l3.
///
/// The phase l^2 + l1^2 - l2^2 - l3^2 factors as 2 (l - l2)(l - l3), so the
/// resonant set is {l = l2} u {l = l3}. On it the oscillatory integral is
/// tau exactly; elsewhere the schemes use tau phi1(2 i tau l1^2).
class ResonanceWeights {
public:
  explicit ResonanceWeights(const OperatorSymbols& ops) : ops_(&ops) {}

  static long phase(long l, long l1, long l2, long l3) noexcept {
    return l * l + l1 * l1 - l2 * l2 - l3 * l3;
  }
  static long factored_phase(long l, long l2, long l3) noexcept {
    return 2 * (l - l2) * (l - l3);
  }
  static bool is_resonant(long l, long l2, long l3) noexcept {
    return (l - l2) * (l - l3) == 0;
  }

  /// 1 - phi1(2 i l^2 tau), the diagonal multiplier in h.
  std::span<const cplx> h_multiplier() const noexcept { return ops_->one_minus_phi1_2(); }
  const TorusGrid& grid() const noexcept { return ops_->grid(); }
  double tau() const noexcept { return ops_->tau(); }

private:
  const OperatorSymbols* ops_;
};

/// Zeroth coefficient of g(u) = u (1 - phi1(-2 i tau d_xx)) conj(u), i.e.
/// sum_k (1 - phi1(2 i tau k^2)) |u_k|^2.
cplx g_zero_mode(const SpectralField& u, const OperatorSymbols& ops);
/// Same with an arbitrary real-even multiplier m_k in place of 1 - phi1(2 i tau k^2).
cplx g_zero_mode(const SpectralField& u, std::span<const cplx> multiplier);

/// (h(u))_l = (1 - phi1(2 i l^2 tau)) |u_l|^2 u_l.
SpectralField h_field(const SpectralField& u, const OperatorSymbols& ops);
SpectralField h_field(const SpectralField& u, std::span<const cplx> multiplier);

/// NRLI1:
///   e^{i tau d_xx}[w - i tau eps^2 w^2 phi1(-2 i tau d_xx) conj w]
///   - 2 i eps^2 tau g_0(w) e^{i tau d_xx} w + i eps^2 tau e^{i tau d_xx} h(w).
SpectralField nrli1_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                         const OperatorSymbols& ops);

/// First-order resonance-based baseline: NRLI1 without the g and h terms.
SpectralField os18_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                        const OperatorSymbols& ops);

/// NRSLI2: implicit symmetric second-order scheme solved by Picard
/// iteration from nrli1_step. Throws SolverFailure on non-convergence.
SpectralField nrsli2_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                          const OperatorSymbols& ops, SolveStats* stats = nullptr);

/// Strang splitting: half free flow, exact flow w e^{-i tau eps^2 |w|^2}
/// of the nonlinear part on the grid, half free flow.
SpectralField strang_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                          const OperatorSymbols& ops);

/// Dispatches on cfg.scheme.
SpectralField cubic_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                         const OperatorSymbols& ops, SolveStats* stats = nullptr);

} // namespace lowreg
