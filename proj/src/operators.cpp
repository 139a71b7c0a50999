#include "lowreg/operators.hpp"

#include <cmath>
#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {

cplx complex_expm1(cplx z) noexcept {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

cplx phi1(cplx z) noexcept {
  if (std::abs(z) < kPhi1SeriesCutoff) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
  }
  return complex_expm1(z) / z;
}

OperatorSymbols::OperatorSymbols(TorusGrid grid, double tau) : grid_(grid), tau_(tau) {
  if (!std::isfinite(tau)) throw ArgumentError("OperatorSymbols: tau must be finite");
  const std::size_t n = grid.n_modes();
  for (auto* v : {&prop_, &prop_inv_, &inv_dx_, &phi1_2_, &phi1_1_, &phi1_1c_,
                  &one_minus_phi1_2_, &one_minus_phi1_1_, &one_minus_phi1_1c_}) {
    v->resize(n);
  }
  const cplx i{0.0, 1.0};
  for (std::size_t k = 0; k < n; ++k) {
    const int l = grid.mode(k);
    const double tl2 = tau * static_cast<double>(l) * static_cast<double>(l);
    prop_[k] = std::polar(1.0, -tl2);
    prop_inv_[k] = std::polar(1.0, tl2);
    inv_dx_[k] = (l == 0) ? cplx{0.0, 0.0} : 1.0 / (i * static_cast<double>(l));
    phi1_2_[k] = phi1(2.0 * i * tl2);
    phi1_1_[k] = phi1(i * tl2);
    phi1_1c_[k] = phi1(-i * tl2);
    one_minus_phi1_2_[k] = 1.0 - phi1_2_[k];
    one_minus_phi1_1_[k] = 1.0 - phi1_1_[k];
    one_minus_phi1_1c_[k] = 1.0 - phi1_1c_[k];
  }
}

void require_symbols(const OperatorSymbols& ops, const TorusGrid& grid, double tau,
                     const char* context) {
  require_same_grid(ops.grid(), grid, context);
  if (ops.tau() != tau) {
    throw ArgumentError(std::string(context) + ": symbol table built for tau = " +
                        std::to_string(ops.tau()) + ", config has tau = " +
                        std::to_string(tau));
  }
}

SpectralField apply_multiplier(const SpectralField& field, std::span<const cplx> symbol) {
  if (symbol.size() != field.size()) {
    throw ArgumentError("apply_multiplier: symbol length mismatch");
  }
  SpectralField out = field;
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= symbol[k];
  return out;
}

SpectralField free_propagate(const SpectralField& field, double t) {
  SpectralField out = field;
  const TorusGrid& g = field.grid();
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double l = g.mode(k);
    c[k] *= std::polar(1.0, -t * l * l);
  }
  return out;
}

SpectralField antiderivative(const SpectralField& field) {
  SpectralField out = field;
  const TorusGrid& g = field.grid();
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int l = g.mode(k);
    c[k] = (l == 0) ? cplx{0.0, 0.0} : c[k] / cplx{0.0, static_cast<double>(l)};
  }
  return out;
}

SpectralField derivative(const SpectralField& field) {
  SpectralField out = field;
  const TorusGrid& g = field.grid();
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= cplx{0.0, static_cast<double>(g.mode(k))};
  }
  return out;
}

SpectralField apply_phi1_laplacian(const SpectralField& field, cplx a) {
  SpectralField out = field;
  const TorusGrid& g = field.grid();
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double l = g.mode(k);
    c[k] *= phi1(-a * (l * l));
  }
  return out;
}

SpectralField conjugate(const SpectralField& field) {
  const TorusGrid& g = field.grid();
  SpectralField out(g);
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    out.coeff(l) = std::conj(field.coeff(g.wrap(-static_cast<long>(l))));
  }
  return out;
}

SpectralField truncate_two_thirds(const SpectralField& field) {
  SpectralField out = field;
  const TorusGrid& g = field.grid();
  const double cutoff = static_cast<double>(g.n_modes()) / 3.0;
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (std::abs(static_cast<double>(g.mode(k))) > cutoff) c[k] = 0.0;
  }
  return out;
}

} // namespace lowreg
