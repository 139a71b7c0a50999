#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "lowreg/field.hpp"
#include "lowreg/norms.hpp"
#include "lowreg/random_data.hpp"

namespace lowreg::test {

inline constexpr cplx I{0.0, 1.0};

inline double h1_gap(const SpectralField& a, const SpectralField& b) {
  return sobolev_distance(a, b, 1.0);
}

/// Zero-mode-only field holding c.
inline SpectralField constant_field(const TorusGrid& g, cplx c) {
  SpectralField f(g);
  f.coeff(0) = c;
  return f;
}

inline SpectralField single_mode(const TorusGrid& g, int l, cplx a) {
  SpectralField f(g);
  f.coeff(l) = a;
  return f;
}

/// Random data rescaled to a chosen H^1 norm.
inline SpectralField scaled_random(const TorusGrid& g, double theta, std::uint64_t seed,
                                   double h1) {
  SpectralField f = random_initial_data(g, theta, seed);
  return (h1 / sobolev_norm(f, 1.0)) * f;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += std::log(x[k]);
    my += std::log(y[k]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (std::log(x[k]) - mx) * (std::log(y[k]) - my);
    sxx += (std::log(x[k]) - mx) * (std::log(x[k]) - mx);
  }
  return sxy / sxx;
}

} // namespace lowreg::test
