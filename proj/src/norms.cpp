#include "lowreg/norms.hpp"

#include <cmath>
#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {

double sobolev_norm(const SpectralField& field, double r) {
  if (!(r >= 0.0)) {
    throw ArgumentError("sobolev_norm: r must be >= 0, got " + std::to_string(r));
  }
  const TorusGrid& g = field.grid();
  auto c = field.coeffs();
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double weight =
        r == 0.0 ? 1.0 : std::pow(1.0 + std::abs(static_cast<double>(g.mode(k))), 2.0 * r);
    sum += weight * std::norm(c[k]);
  }
  return std::sqrt(sum);
}

double sobolev_distance(const SpectralField& a, const SpectralField& b, double r) {
  return sobolev_norm(a - b, r);
}

double mean_square(const SpectralField& field) {
  double sum = 0.0;
  for (const cplx& c : field.coeffs()) sum += std::norm(c);
  return sum;
}

} // namespace lowreg
