#pragma once

#include "lowreg/field.hpp"

namespace lowreg {

/// ||f||_r = sqrt(sum_l (1 + |l|)^{2r} |f_l|^2). r = 0 gives the discrete
/// L2 norm, equal to the root mean square of the grid samples.
double sobolev_norm(const SpectralField& field, double r);

/// ||a - b||_r
double sobolev_distance(const SpectralField& a, const SpectralField& b, double r);

/// sum_l |f_l|^2, the mean of |f|^2 over the torus.
double mean_square(const SpectralField& field);

} // namespace lowreg
