#include "lowreg/cubic.hpp"

#include <cmath>
#include <string>

#include "lowreg/errors.hpp"
#include "pseudo_spectral.hpp"

namespace lowreg {
namespace {

using detail::from_grid;
using detail::times;
using detail::to_grid;

constexpr cplx I{0.0, 1.0};

void check_inputs(const SpectralField& w, const CubicSchemeConfig& cfg,
                  const OperatorSymbols& ops, CubicScheme expected, const char* name) {
  cfg.validate();
  if (cfg.scheme != expected) {
    throw ArgumentError(std::string(name) + ": config selects a different scheme");
  }
  require_symbols(ops, w.grid(), cfg.tau, name);
}

// w^2 * (multiplier applied to conj w), formed on the grid.
SpectralField cubic_product(const SpectralField& w, std::span<const cplx> phi_symbol,
                            bool dealias) {
  const auto ww = to_grid(w);
  const auto pb = to_grid(apply_multiplier(conjugate(w), phi_symbol));
  return from_grid(times(ww, ww, pb), w.grid(), dealias);
}

// Explicit part of NRLI1/OS18 before the final propagation.
SpectralField os18_inner(const SpectralField& w, const CubicSchemeConfig& cfg,
                         const OperatorSymbols& ops) {
  const double e2t = cfg.eps * cfg.eps * cfg.tau;
  SpectralField inner = w;
  inner -= (I * e2t) * cubic_product(w, ops.phi1_2(), cfg.dealias);
  return inner;
}

} // namespace

void CubicSchemeConfig::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ArgumentError("eps must lie in (0, 1], got " + std::to_string(eps));
  }
  if (!std::isfinite(tau) || tau == 0.0) {
    throw ArgumentError("tau must be finite and nonzero, got " + std::to_string(tau));
  }
  if (!(fp_tol > 0.0)) throw ArgumentError("fp_tol must be > 0");
  if (fp_max_iter < 1) throw ArgumentError("fp_max_iter must be >= 1");
}

cplx g_zero_mode(const SpectralField& u, std::span<const cplx> multiplier) {
  if (multiplier.size() != u.size()) throw ArgumentError("g_zero_mode: size mismatch");
  cplx sum{0.0, 0.0};
  auto c = u.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) sum += multiplier[k] * std::norm(c[k]);
  return sum;
}

cplx g_zero_mode(const SpectralField& u, const OperatorSymbols& ops) {
  require_same_grid(ops.grid(), u.grid(), "g_zero_mode");
  return g_zero_mode(u, ops.one_minus_phi1_2());
}

SpectralField h_field(const SpectralField& u, std::span<const cplx> multiplier) {
  if (multiplier.size() != u.size()) throw ArgumentError("h_field: size mismatch");
  SpectralField out = u;
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= multiplier[k] * std::norm(c[k]);
  return out;
}

SpectralField h_field(const SpectralField& u, const OperatorSymbols& ops) {
  require_same_grid(ops.grid(), u.grid(), "h_field");
  return h_field(u, ops.one_minus_phi1_2());
}

SpectralField os18_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                        const OperatorSymbols& ops) {
  check_inputs(w, cfg, ops, CubicScheme::OS18, "os18_step");
  return apply_multiplier(os18_inner(w, cfg, ops), ops.prop());
}

SpectralField nrli1_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                         const OperatorSymbols& ops) {
  check_inputs(w, cfg, ops, CubicScheme::NRLI1, "nrli1_step");
  const double e2t = cfg.eps * cfg.eps * cfg.tau;
  SpectralField out = apply_multiplier(os18_inner(w, cfg, ops), ops.prop());
  const SpectralField pw = apply_multiplier(w, ops.prop());
  out -= (2.0 * I * e2t * g_zero_mode(w, ops)) * pw;
  out += (I * e2t) * apply_multiplier(h_field(w, ops), ops.prop());
  return out;
}

SpectralField nrsli2_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                          const OperatorSymbols& ops, SolveStats* stats) {
  check_inputs(w, cfg, ops, CubicScheme::NRSLI2, "nrsli2_step");
  const double half = 0.5 * cfg.eps * cfg.eps * cfg.tau;
  const bool full = cfg.nrsli2_weights == ResonantWeights::FullStep;
  const auto m_old = full ? ops.one_minus_phi1_2() : ops.one_minus_phi1_1();
  const auto m_new = full ? ops.one_minus_phi1_2() : ops.one_minus_phi1_1c();

  SpectralField inner = w;
  inner -= (I * half) * cubic_product(w, ops.phi1_1(), cfg.dealias);
  SpectralField known = apply_multiplier(inner, ops.prop());
  const SpectralField pw = apply_multiplier(w, ops.prop());
  known -= (I * half * 2.0 * g_zero_mode(w, m_old)) * pw;
  known += (I * half) * apply_multiplier(h_field(w, m_old), ops.prop());

  auto rhs = [&](const SpectralField& y) {
    SpectralField out = known;
    out -= (I * half) * cubic_product(y, ops.phi1_1c(), cfg.dealias);
    out -= (I * half * 2.0 * g_zero_mode(y, m_new)) * y;
    out += (I * half) * h_field(y, m_new);
    return out;
  };

  CubicSchemeConfig predictor = cfg;
  predictor.scheme = CubicScheme::NRLI1;
  return solve_fixed_point(nrli1_step(w, predictor, ops), rhs, cfg.fp_tol,
                           cfg.fp_max_iter, "nrsli2_step", stats);
}

SpectralField strang_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                          const OperatorSymbols& ops) {
  check_inputs(w, cfg, ops, CubicScheme::Strang, "strang_step");
  const double e2t = cfg.eps * cfg.eps * cfg.tau;
  auto u = to_grid(free_propagate(w, 0.5 * cfg.tau));
  for (cplx& z : u) z *= std::polar(1.0, -e2t * std::norm(z));
  return free_propagate(from_grid(u, w.grid(), cfg.dealias), 0.5 * cfg.tau);
}

SpectralField cubic_step(const SpectralField& w, const CubicSchemeConfig& cfg,
                         const OperatorSymbols& ops, SolveStats* stats) {
  switch (cfg.scheme) {
    case CubicScheme::NRLI1: return nrli1_step(w, cfg, ops);
    case CubicScheme::NRSLI2: return nrsli2_step(w, cfg, ops, stats);
    case CubicScheme::OS18: return os18_step(w, cfg, ops);
    case CubicScheme::Strang: return strang_step(w, cfg, ops);
  }
  throw ArgumentError("cubic_step: unknown scheme");
}

} // namespace lowreg
