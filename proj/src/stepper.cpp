#include "lowreg/stepper.hpp"

#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {

std::string_view to_string(Equation e) noexcept {
  switch (e) {
    case Equation::QuadraticSquare: return "quadratic";
    case Equation::QuadraticModulusSquare: return "quadratic-modsq";
    case Equation::Cubic: return "cubic";
  }
  return "?";
}

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::LI1: return "li1";
    case Scheme::SLI2: return "sli2";
    case Scheme::NRLI1: return "nrli1";
    case Scheme::NRSLI2: return "nrsli2";
    case Scheme::OS18: return "os18";
    case Scheme::Strang: return "strang";
  }
  return "?";
}

Equation parse_equation(std::string_view name) {
  for (Equation e : {Equation::QuadraticSquare, Equation::QuadraticModulusSquare,
                     Equation::Cubic}) {
    if (to_string(e) == name) return e;
  }
  throw ArgumentError("unknown equation '" + std::string(name) +
                      "' (expected quadratic, quadratic-modsq or cubic)");
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::LI1, Scheme::SLI2, Scheme::NRLI1, Scheme::NRSLI2, Scheme::OS18,
                   Scheme::Strang}) {
    if (to_string(s) == name) return s;
  }
  throw ArgumentError("unknown scheme '" + std::string(name) +
                      "' (expected li1, sli2, nrli1, nrsli2, os18 or strang)");
}

bool is_quadratic(Equation e) noexcept { return e != Equation::Cubic; }

bool compatible(Equation e, Scheme s) noexcept {
  if (is_quadratic(e)) return s == Scheme::LI1 || s == Scheme::SLI2;
  return s == Scheme::NRLI1 || s == Scheme::NRSLI2 || s == Scheme::OS18 ||
         s == Scheme::Strang;
}

bool is_implicit(Scheme s) noexcept { return s == Scheme::SLI2 || s == Scheme::NRSLI2; }

Scheme symmetric_scheme(Equation e) noexcept {
  return is_quadratic(e) ? Scheme::SLI2 : Scheme::NRSLI2;
}

namespace {

CubicScheme to_cubic(Scheme s) {
  switch (s) {
    case Scheme::NRLI1: return CubicScheme::NRLI1;
    case Scheme::NRSLI2: return CubicScheme::NRSLI2;
    case Scheme::OS18: return CubicScheme::OS18;
    case Scheme::Strang: return CubicScheme::Strang;
    default: break;
  }
  throw ArgumentError("not a cubic scheme: " + std::string(to_string(s)));
}

} // namespace

Stepper::Stepper(Equation equation, Scheme scheme, double eps, double tau, TorusGrid grid,
                 SolverSettings solver)
    : equation_(equation), scheme_(scheme), ops_(grid, tau) {
  if (!compatible(equation, scheme)) {
    throw ArgumentError("scheme " + std::string(to_string(scheme)) +
                        " does not apply to the " + std::string(to_string(equation)) +
                        " equation");
  }
  if (is_quadratic(equation)) {
    QuadSchemeConfig cfg;
    cfg.eps = eps;
    cfg.tau = tau;
    cfg.nonlinearity = equation == Equation::QuadraticSquare ? QuadNonlinearity::Square
                                                             : QuadNonlinearity::ModulusSquare;
    cfg.fp_tol = solver.fp_tol;
    cfg.fp_max_iter = solver.fp_max_iter;
    cfg.dealias = solver.dealias;
    cfg.validate();
    config_ = cfg;
  } else {
    CubicSchemeConfig cfg;
    cfg.eps = eps;
    cfg.tau = tau;
    cfg.scheme = to_cubic(scheme);
    cfg.fp_tol = solver.fp_tol;
    cfg.fp_max_iter = solver.fp_max_iter;
    cfg.dealias = solver.dealias;
    cfg.validate();
    config_ = cfg;
  }
}

SpectralField Stepper::step(const SpectralField& w, SolveStats* stats) const {
  if (const auto* q = std::get_if<QuadSchemeConfig>(&config_)) {
    const bool square = q->nonlinearity == QuadNonlinearity::Square;
    if (scheme_ == Scheme::LI1) {
      return square ? li1_step(w, *q, ops_) : li1_conj_step(w, *q, ops_);
    }
    return square ? sli2_step(w, *q, ops_, stats) : sli2_conj_step(w, *q, ops_, stats);
  }
  return cubic_step(w, std::get<CubicSchemeConfig>(config_), ops_, stats);
}

} // namespace lowreg
