#pragma once

// Brute-force reference constructions. These evaluate the Duhamel integrals
// mode by mode in the twisted variable v = e^{-i t d_xx} w and share no code
// with the steppers beyond the field container and the FFT.

#include <cstdint>
#include <functional>

#include "lowreg/field.hpp"

namespace lowreg::verify {

/// Random coefficients (a + i b)<l>^{-theta}, a, b ~ U[0,1), on modes
/// lo <= l <= hi; zero elsewhere.
SpectralField band_limited_random(const TorusGrid& grid, int lo, int hi, double theta,
                                  std::uint64_t seed);

/// One LI1 step for i w_t = -w_xx + eps w^2 built from the double sum
/// sum_{l1 + l2 = l} int_0^tau e^{i (t_n + s) Omega} ds v_l1 v_l2 with
/// Omega = l^2 - l1^2 - l2^2 evaluated directly (tau on Omega = 0).
/// Throws ArgumentError if the support of w makes any product alias.
SpectralField li1_double_sum(const SpectralField& w, double eps, double tau, double t_n);

/// Same for i w_t = -w_xx + eps |w|^2: sum over l = l2 - l1 of
/// conj(v_l1) v_l2 with Omega = l^2 + l1^2 - l2^2.
SpectralField li1_conj_double_sum(const SpectralField& w, double eps, double tau,
                                  double t_n);

/// One NRLI1 step from the triple sum over l = -l1 + l2 + l3 (aliases
/// folded back onto the grid): weight tau on exactly resonant quadruples
/// (unaliased, l^2 + l1^2 - l2^2 - l3^2 = 0), int_0^tau e^{2 i s l1^2} ds
/// otherwise.
SpectralField nrli1_triple_sum(const SpectralField& w, double eps, double tau, double t_n);

enum class Nonlinearity { Square, ModulusSquare, Cubic };

/// Integrating-factor RK4 for the semi-discrete equation
/// i w_t = -w_xx + c N(w), c = eps (quadratic) or eps^2 (cubic), with
/// `substeps` equal steps over [0, t]. Fourth order; used as "exact flow".
SpectralField lawson_rk4_flow(const SpectralField& w0, Nonlinearity kind, double eps,
                              double t, long substeps);

/// Classical RK4 for a scalar ODE z' = f(z).
cplx scalar_rk4(const std::function<cplx(cplx)>& f, cplx z0, double t, long substeps);

} // namespace lowreg::verify
