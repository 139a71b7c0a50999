#pragma once

#include <span>
#include <vector>

#include "lowreg/field.hpp"

namespace lowreg {

/// Samples f(x_j) -> coefficients f_l = (1/N) sum_j f(x_j) e^{-i l x_j}.
/// Throws ArgumentError on a length mismatch.
SpectralField forward_transform(std::span<const cplx> values, const TorusGrid& grid);

/// Coefficients -> samples f(x_j) = sum_l f_l e^{i l x_j}.
std::vector<cplx> inverse_transform(const SpectralField& field);

} // namespace lowreg
