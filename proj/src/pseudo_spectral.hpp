#pragma once

// Helpers shared by the steppers for forming nonlinear terms on the grid.

#include <vector>

#include "lowreg/field.hpp"
#include "lowreg/operators.hpp"
#include "lowreg/transform.hpp"

namespace lowreg::detail {

using Samples = std::vector<cplx>;

inline Samples to_grid(const SpectralField& f) { return inverse_transform(f); }

inline SpectralField from_grid(const Samples& s, const TorusGrid& g, bool dealias) {
  SpectralField out = forward_transform(s, g);
  return dealias ? truncate_two_thirds(out) : out;
}

inline Samples times(const Samples& a, const Samples& b) {
  Samples out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
  return out;
}

inline Samples times(const Samples& a, const Samples& b, const Samples& c) {
  Samples out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] * b[j] * c[j];
  return out;
}

} // namespace lowreg::detail
