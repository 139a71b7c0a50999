#include "lowreg/quadratic.hpp"

#include <cmath>
#include <string>

#include "lowreg/errors.hpp"
#include "lowreg/norms.hpp"
#include "pseudo_spectral.hpp"

namespace lowreg {
namespace {

using detail::from_grid;
using detail::times;
using detail::to_grid;

constexpr cplx I{0.0, 1.0};

void check_inputs(const SpectralField& w, const QuadSchemeConfig& cfg,
                  const OperatorSymbols& ops, QuadNonlinearity expected,
                  const char* name) {
  cfg.validate();
  if (cfg.nonlinearity != expected) {
    throw ArgumentError(std::string(name) + ": wrong nonlinearity in config");
  }
  require_symbols(ops, w.grid(), cfg.tau, name);
}

// (e^{i tau d_xx} d_x^{-1} u)^2 - e^{i tau d_xx} (d_x^{-1} u)^2
SpectralField square_bracket_explicit(const SpectralField& u, const OperatorSymbols& ops,
                                      bool dealias) {
  const TorusGrid& g = u.grid();
  const SpectralField du = apply_multiplier(u, ops.inv_dx());
  const auto a = to_grid(apply_multiplier(du, ops.prop()));
  const auto b = to_grid(du);
  return from_grid(times(a, a), g, dealias) -
         apply_multiplier(from_grid(times(b, b), g, dealias), ops.prop());
}

// (d_x^{-1} y)^2 - e^{i tau d_xx} (e^{-i tau d_xx} d_x^{-1} y)^2
SpectralField square_bracket_implicit(const SpectralField& y, const OperatorSymbols& ops,
                                      bool dealias) {
  const TorusGrid& g = y.grid();
  const SpectralField dy = apply_multiplier(y, ops.inv_dx());
  const auto a = to_grid(dy);
  const auto b = to_grid(apply_multiplier(dy, ops.prop_inv()));
  return from_grid(times(a, a), g, dealias) -
         apply_multiplier(from_grid(times(b, b), g, dealias), ops.prop());
}

// d_x^{-1} [ (e^{i tau d_xx} u)(e^{-i tau d_xx} d_x^{-1} conj u)
//            - e^{i tau d_xx} (u d_x^{-1} conj u) ]
SpectralField conj_bracket_explicit(const SpectralField& u, const OperatorSymbols& ops,
                                    bool dealias) {
  const TorusGrid& g = u.grid();
  const SpectralField dub = apply_multiplier(conjugate(u), ops.inv_dx());
  const auto pu = to_grid(apply_multiplier(u, ops.prop()));
  const auto bdub = to_grid(apply_multiplier(dub, ops.prop_inv()));
  const auto uu = to_grid(u);
  const auto du = to_grid(dub);
  SpectralField inner = from_grid(times(pu, bdub), g, dealias) -
                        apply_multiplier(from_grid(times(uu, du), g, dealias), ops.prop());
  return apply_multiplier(inner, ops.inv_dx());
}

// d_x^{-1} [ y d_x^{-1} conj y
//            - e^{i tau d_xx} ((e^{-i tau d_xx} y)(e^{i tau d_xx} d_x^{-1} conj y)) ]
SpectralField conj_bracket_implicit(const SpectralField& y, const OperatorSymbols& ops,
                                    bool dealias) {
  const TorusGrid& g = y.grid();
  const SpectralField dyb = apply_multiplier(conjugate(y), ops.inv_dx());
  const auto yy = to_grid(y);
  const auto dy = to_grid(dyb);
  const auto by = to_grid(apply_multiplier(y, ops.prop_inv()));
  const auto pdy = to_grid(apply_multiplier(dyb, ops.prop()));
  SpectralField inner = from_grid(times(yy, dy), g, dealias) -
                        apply_multiplier(from_grid(times(by, pdy), g, dealias), ops.prop());
  return apply_multiplier(inner, ops.inv_dx());
}

} // namespace

void QuadSchemeConfig::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ArgumentError("eps must lie in (0, 1], got " + std::to_string(eps));
  }
  if (!std::isfinite(tau) || tau == 0.0) {
    throw ArgumentError("tau must be finite and nonzero, got " + std::to_string(tau));
  }
  if (!(fp_tol > 0.0)) throw ArgumentError("fp_tol must be > 0");
  if (fp_max_iter < 1) throw ArgumentError("fp_max_iter must be >= 1");
}

SpectralField li1_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                       const OperatorSymbols& ops) {
  check_inputs(w, cfg, ops, QuadNonlinearity::Square, "li1_step");
  const double eps = cfg.eps, tau = cfg.tau;
  const cplx w0 = w.zero_mode();

  SpectralField out = apply_multiplier(w, ops.prop());
  out *= 1.0 - 2.0 * I * eps * tau * w0;
  out.coeff(0) += I * eps * tau * w0 * w0;
  out += (eps / 2.0) * square_bracket_explicit(w, ops, cfg.dealias);
  return out;
}

SpectralField li1_conj_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                            const OperatorSymbols& ops) {
  check_inputs(w, cfg, ops, QuadNonlinearity::ModulusSquare, "li1_conj_step");
  const double eps = cfg.eps, tau = cfg.tau;
  const cplx w0 = w.zero_mode();

  SpectralField out = apply_multiplier(w, ops.prop());
  out *= 1.0 - I * eps * tau * std::conj(w0);
  out.coeff(0) -= I * eps * tau * (mean_square(w) - std::norm(w0));
  out += (eps / 2.0) * conj_bracket_explicit(w, ops, cfg.dealias);
  return out;
}

SpectralField sli2_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                        const OperatorSymbols& ops, SolveStats* stats) {
  check_inputs(w, cfg, ops, QuadNonlinearity::Square, "sli2_step");
  const double eps = cfg.eps, tau = cfg.tau;
  const cplx w0 = w.zero_mode();

  // Part of the right-hand side that depends on w^n only.
  const SpectralField pw = apply_multiplier(w, ops.prop());
  SpectralField known = pw;
  known -= (I * eps * tau * w0) * pw;
  known.coeff(0) += 0.5 * I * eps * tau * w0 * w0;
  known += (eps / 4.0) * square_bracket_explicit(w, ops, cfg.dealias);

  auto rhs = [&](const SpectralField& y) {
    const cplx y0 = y.zero_mode();
    SpectralField out = known;
    out -= (I * eps * tau * y0) * y;
    out.coeff(0) += 0.5 * I * eps * tau * y0 * y0;
    out += (eps / 4.0) * square_bracket_implicit(y, ops, cfg.dealias);
    return out;
  };

  return solve_fixed_point(li1_step(w, cfg, ops), rhs, cfg.fp_tol,
                           cfg.fp_max_iter, "sli2_step", stats);
}

SpectralField sli2_conj_step(const SpectralField& w, const QuadSchemeConfig& cfg,
                             const OperatorSymbols& ops, SolveStats* stats) {
  check_inputs(w, cfg, ops, QuadNonlinearity::ModulusSquare, "sli2_conj_step");
  const double eps = cfg.eps, tau = cfg.tau;
  const cplx w0 = w.zero_mode();

  const SpectralField pw = apply_multiplier(w, ops.prop());
  SpectralField known = pw;
  known -= (0.5 * I * eps * tau * std::conj(w0)) * pw;
  known.coeff(0) -= 0.5 * I * eps * tau * (mean_square(w) - std::norm(w0));
  known += (eps / 4.0) * conj_bracket_explicit(w, ops, cfg.dealias);

  auto rhs = [&](const SpectralField& y) {
    const cplx y0 = y.zero_mode();
    SpectralField out = known;
    out -= (0.5 * I * eps * tau * std::conj(y0)) * y;
    out.coeff(0) -= 0.5 * I * eps * tau * (mean_square(y) - std::norm(y0));
    out += (eps / 4.0) * conj_bracket_implicit(y, ops, cfg.dealias);
    return out;
  };

  return solve_fixed_point(li1_conj_step(w, cfg, ops), rhs, cfg.fp_tol, cfg.fp_max_iter,
                           "sli2_conj_step", stats);
}

} // namespace lowreg
