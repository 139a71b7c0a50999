#include "lowreg/verify/selftest.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "lowreg/cubic.hpp"
#include "lowreg/norms.hpp"
#include "lowreg/quadratic.hpp"
#include "lowreg/random_data.hpp"
#include "lowreg/verify/oracles.hpp"

namespace lowreg::verify {
namespace {

constexpr cplx I{0.0, 1.0};

CheckResult check(std::string name, double measured, double bound) {
  return {std::move(name), measured <= bound, measured, bound};
}

double quadratic_oracle_gap(QuadNonlinearity kind) {
  double worst = 0.0;
  for (std::size_t n : {8u, 16u}) {
    const TorusGrid g(n);
    const int lo = -static_cast<int>(n) / 4, hi = static_cast<int>(n) / 4 - 1;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const SpectralField w = band_limited_random(g, lo, hi, 0.5, 1000 + seed);
      const double eps = 0.3 + 0.01 * static_cast<double>(seed);
      const double tau = 0.05 + 0.003 * static_cast<double>(seed);
      const OperatorSymbols ops(g, tau);
      QuadSchemeConfig cfg{eps, tau, kind};
      const SpectralField got = kind == QuadNonlinearity::Square ? li1_step(w, cfg, ops)
                                                                 : li1_conj_step(w, cfg, ops);
      const SpectralField want = kind == QuadNonlinearity::Square
                                     ? li1_double_sum(w, eps, tau, 0.37)
                                     : li1_conj_double_sum(w, eps, tau, 0.37);
      worst = std::max(worst, sobolev_distance(got, want, 1.0));
    }
  }
  return worst;
}

double cubic_oracle_gap(int fields) {
  double worst = 0.0;
  for (std::size_t n : {8u, 12u, 16u}) {
    const TorusGrid g(n);
    for (int s = 0; s < fields; ++s) {
      const SpectralField w = random_initial_data(g, 0.5, 2000 + 31 * n + s);
      const double eps = 0.5 + 0.02 * s;
      const double tau = 0.04 + 0.005 * s;
      const OperatorSymbols ops(g, tau);
      CubicSchemeConfig cfg{eps, tau, CubicScheme::NRLI1};
      worst = std::max(worst, sobolev_distance(nrli1_step(w, cfg, ops),
                                               nrli1_triple_sum(w, eps, tau, 0.61), 1.0));
    }
  }
  return worst;
}

double correction_gap() {
  double worst = 0.0;
  const TorusGrid g(16);
  for (int s = 0; s < 50; ++s) {
    const SpectralField w = random_initial_data(g, 1.0, 3000 + s);
    const double eps = 0.7, tau = 0.05;
    const OperatorSymbols ops(g, tau);
    CubicSchemeConfig nr{eps, tau, CubicScheme::NRLI1};
    CubicSchemeConfig os{eps, tau, CubicScheme::OS18};
    const double e2t = eps * eps * tau;
    const SpectralField pw = apply_multiplier(w, ops.prop());
    SpectralField correction = (-2.0 * I * e2t * g_zero_mode(w, ops)) * pw;
    correction += (I * e2t) * apply_multiplier(h_field(w, ops), ops.prop());
    const SpectralField diff = nrli1_step(w, nr, ops) - os18_step(w, os, ops);
    worst = std::max(worst, sobolev_distance(diff, correction, 1.0));
  }
  return worst;
}

template <class Step>
double round_trip_gap(const TorusGrid& g, int fields, double tau, Step&& step) {
  double worst = 0.0;
  for (int s = 0; s < fields; ++s) {
    const SpectralField w = random_initial_data(g, 1.0, 4000 + s);
    const SpectralField forward = step(w, tau);
    const SpectralField back = step(forward, -tau);
    worst = std::max(worst, sobolev_distance(back, w, 1.0));
  }
  return worst;
}

} // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  out.push_back(check("li1 == exact double sum (N=8,16)",
                      quadratic_oracle_gap(QuadNonlinearity::Square), 1e-10));
  out.push_back(check("li1-conj == exact double sum (N=8,16)",
                      quadratic_oracle_gap(QuadNonlinearity::ModulusSquare), 1e-10));
  out.push_back(check("nrli1 == resonance-split triple sum (N=8,12,16)",
                      cubic_oracle_gap(5), 1e-10));
  out.push_back(check("nrli1 - os18 == g/h correction terms", correction_gap(), 1e-13));

  const TorusGrid g(16);
  const double eps = 0.5, tau = 0.05, tol = 1e-12;
  out.push_back(check("sli2 round trip", round_trip_gap(g, 5, tau, [&](const SpectralField& w, double t) {
                        return sli2_step(w, {eps, t, QuadNonlinearity::Square}, OperatorSymbols(g, t));
                      }), 10 * tol));
  out.push_back(check("sli2-conj round trip", round_trip_gap(g, 5, tau, [&](const SpectralField& w, double t) {
                        return sli2_conj_step(w, {eps, t, QuadNonlinearity::ModulusSquare},
                                              OperatorSymbols(g, t));
                      }), 10 * tol));
  out.push_back(check("nrsli2 round trip", round_trip_gap(g, 5, tau, [&](const SpectralField& w, double t) {
                        return nrsli2_step(w, {eps, t, CubicScheme::NRSLI2}, OperatorSymbols(g, t));
                      }), 10 * tol));

  // Zero-mode data: LI1 and NRLI1 are forward Euler, the symmetric schemes
  // are the trapezoidal rule.
  {
    const TorusGrid g4(8);
    const cplx c{0.7, -0.4};
    SpectralField w(g4);
    w.coeff(0) = c;
    const OperatorSymbols ops(g4, tau);
    const cplx li1 = li1_step(w, {eps, tau, QuadNonlinearity::Square}, ops).zero_mode();
    const cplx nr = nrli1_step(w, {eps, tau, CubicScheme::NRLI1}, ops).zero_mode();
    const SpectralField s2 = sli2_step(w, {eps, tau, QuadNonlinearity::Square}, ops);
    const cplx y = s2.zero_mode();
    const double gap = std::max({std::abs(li1 - (c - I * eps * tau * c * c)),
                                 std::abs(nr - (c - I * tau * eps * eps * std::norm(c) * c)),
                                 std::abs(y - (c - 0.5 * I * eps * tau * (c * c + y * y)))});
    out.push_back(check("zero-mode Euler/trapezoid updates", gap, 1e-12));
  }
  return out;
}

bool report(std::ostream& os, const std::vector<CheckResult>& results) {
  bool all = true;
  char buf[256];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%s  %-48s %.3e <= %.1e\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.measured, r.bound);
    os << buf;
    all = all && r.passed;
  }
  return all;
}

} // namespace lowreg::verify
