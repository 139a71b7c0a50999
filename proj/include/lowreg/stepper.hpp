#pragma once

#include <string_view>
#include <variant>

#include "lowreg/cubic.hpp"
#include "lowreg/field.hpp"
#include "lowreg/fixed_point.hpp"
#include "lowreg/operators.hpp"
#include "lowreg/quadratic.hpp"

namespace lowreg {

enum class Equation { QuadraticSquare, QuadraticModulusSquare, Cubic };
enum class Scheme { LI1, SLI2, NRLI1, NRSLI2, OS18, Strang };

std::string_view to_string(Equation e) noexcept;
std::string_view to_string(Scheme s) noexcept;
/// Accepts "quadratic", "quadratic-modsq", "cubic". Throws ArgumentError.
Equation parse_equation(std::string_view name);
/// Accepts "li1", "sli2", "nrli1", "nrsli2", "os18", "strang". Throws ArgumentError.
Scheme parse_scheme(std::string_view name);

bool is_quadratic(Equation e) noexcept;
bool compatible(Equation e, Scheme s) noexcept;
bool is_implicit(Scheme s) noexcept;
/// SLI2 for the quadratic equations, NRSLI2 for the cubic one.
Scheme symmetric_scheme(Equation e) noexcept;

struct SolverSettings {
  double fp_tol = 1e-12;
  int fp_max_iter = 100;
  bool dealias = false;
};

/// A scheme bound to (equation, eps, tau, grid) with its symbol table.
class Stepper {
public:
  Stepper(Equation equation, Scheme scheme, double eps, double tau, TorusGrid grid,
          SolverSettings solver = {});

  SpectralField step(const SpectralField& w, SolveStats* stats = nullptr) const;

  Equation equation() const noexcept { return equation_; }
  Scheme scheme() const noexcept { return scheme_; }
  double tau() const noexcept { return ops_.tau(); }
  const OperatorSymbols& symbols() const noexcept { return ops_; }

private:
  Equation equation_;
  Scheme scheme_;
  OperatorSymbols ops_;
  std::variant<QuadSchemeConfig, CubicSchemeConfig> config_;
};

} // namespace lowreg
