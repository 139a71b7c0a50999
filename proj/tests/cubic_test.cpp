#include <doctest.h>

#include "lowreg/cubic.hpp"
#include "lowreg/errors.hpp"
#include "lowreg/transform.hpp"
#include "lowreg/verify/oracles.hpp"
#include "support.hpp"

using namespace lowreg;
using lowreg::test::I;

namespace {

CubicSchemeConfig cfg_for(CubicScheme s, double eps, double tau) { return {eps, tau, s}; }

SpectralField step(CubicScheme s, const SpectralField& w, double eps, double tau,
                   double fp_tol = 1e-12) {
  CubicSchemeConfig cfg = cfg_for(s, eps, tau);
  cfg.fp_tol = fp_tol;
  return cubic_step(w, cfg, OperatorSymbols(w.grid(), tau));
}

// g_0 the long way: conjugate on the grid, apply the multiplier, multiply
// by u on the grid, average.
cplx g_zero_physical(const SpectralField& u, const OperatorSymbols& ops) {
  const TorusGrid& g = u.grid();
  auto us = inverse_transform(u);
  std::vector<cplx> conj_s(us.size());
  for (std::size_t j = 0; j < us.size(); ++j) conj_s[j] = std::conj(us[j]);
  const SpectralField filtered =
      apply_multiplier(forward_transform(conj_s, g), ops.one_minus_phi1_2());
  const auto fs = inverse_transform(filtered);
  cplx mean = 0;
  for (std::size_t j = 0; j < us.size(); ++j) mean += us[j] * fs[j];
  return mean / static_cast<double>(us.size());
}

} // namespace

TEST_CASE("resonance identity, exhaustive over |l_j| <= 8") {
  long checked = 0, resonant = 0;
  for (long l1 = -8; l1 <= 8; ++l1) {
    for (long l2 = -8; l2 <= 8; ++l2) {
      for (long l3 = -8; l3 <= 8; ++l3) {
        const long l = -l1 + l2 + l3;
        if (l < -8 || l > 8) continue;
        REQUIRE(ResonanceWeights::phase(l, l1, l2, l3) ==
                ResonanceWeights::factored_phase(l, l2, l3));
        REQUIRE(ResonanceWeights::is_resonant(l, l2, l3) ==
                (ResonanceWeights::phase(l, l1, l2, l3) == 0));
        resonant += ResonanceWeights::is_resonant(l, l2, l3);
        ++checked;
      }
    }
  }
  CHECK(checked > 3000);
  CHECK(resonant > 0);
}

TEST_CASE("resonant quadruples carry weight tau for every l1") {
  // The oscillatory weight int_0^tau e^{i s Omega} ds with Omega the phase,
  // evaluated by a fine midpoint rule: tau on the resonant set.
  const double tau = 0.3;
  for (long l1 = -6; l1 <= 6; ++l1) {
    for (long l2 : {-3L, 0L, 4L}) {
      const long l3 = l1;  // l = l2
      const long l = -l1 + l2 + l3;
      REQUIRE(ResonanceWeights::is_resonant(l, l2, l3));
      const double omega = static_cast<double>(ResonanceWeights::phase(l, l1, l2, l3));
      cplx w = 0;
      const int m = 2000;
      for (int k = 0; k < m; ++k) w += std::exp(I * omega * ((k + 0.5) * tau / m)) * (tau / m);
      CHECK(std::abs(w - tau) < 1e-13);
    }
  }
  const TorusGrid g(16);
  const OperatorSymbols ops(g, tau);
  const ResonanceWeights rw(ops);
  CHECK(rw.tau() == tau);
  CHECK(rw.h_multiplier()[g.index(0)] == cplx(0.0));
  CHECK(rw.h_multiplier()[g.index(3)] == 1.0 - phi1(cplx(0, 2 * tau * 9)));
}

TEST_CASE("g_0 and h examples") {
  const TorusGrid g(16);
  const double tau = 0.2;
  const OperatorSymbols ops(g, tau);
  CHECK(g_zero_mode(SpectralField(g), ops) == cplx(0.0));
  CHECK(g_zero_mode(test::constant_field(g, {1.0, 2.0}), ops) == cplx(0.0));
  const cplx a{0.7, -0.4};
  const SpectralField m3 = test::single_mode(g, 3, a);
  const cplx mult = 1.0 - phi1(cplx(0, 2 * tau * 9));
  CHECK(std::abs(g_zero_mode(m3, ops) - std::norm(a) * mult) < 1e-15);

  CHECK(h_field(SpectralField(g), ops) == SpectralField(g));
  CHECK(sobolev_norm(h_field(test::constant_field(g, a), ops), 1.0) == 0.0);
  const SpectralField h = h_field(m3, ops);
  CHECK(std::abs(h.coeff(3) - mult * std::norm(a) * a) < 1e-15);
  CHECK(sobolev_norm(h - test::single_mode(g, 3, h.coeff(3)), 1.0) == 0.0);
}

TEST_CASE("g_0 agrees with the physical-space construction") {
  for (std::size_t n : {8u, 16u, 64u}) {
    const TorusGrid g(n);
    const OperatorSymbols ops(g, 0.13);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SpectralField u = random_initial_data(g, 0.5, seed);
      const cplx want = g_zero_physical(u, ops);
      CHECK(std::abs(g_zero_mode(u, ops) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("NRLI1 and OS18 examples") {
  const TorusGrid g(16);
  const double eps = 0.7, tau = 0.1;
  for (auto s : {CubicScheme::NRLI1, CubicScheme::OS18, CubicScheme::NRSLI2,
                 CubicScheme::Strang}) {
    CHECK(step(s, SpectralField(g), eps, tau) == SpectralField(g));
  }
  const cplx c{0.4, -0.9};
  const cplx euler = c - I * tau * eps * eps * std::norm(c) * c;
  for (auto s : {CubicScheme::NRLI1, CubicScheme::OS18}) {
    const SpectralField out = step(s, test::constant_field(g, c), eps, tau);
    CHECK(test::h1_gap(out, test::constant_field(g, euler)) < 1e-15);
  }
}

TEST_CASE("NRLI1 equals the resonance-split triple sum") {
  for (std::size_t n : {8u, 12u, 16u}) {
    const TorusGrid g(n);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const SpectralField w = random_initial_data(g, 0.0, 500 + seed);
      const double eps = 0.8, tau = 0.15;
      const OperatorSymbols ops(g, tau);
      CHECK(test::h1_gap(nrli1_step(w, cfg_for(CubicScheme::NRLI1, eps, tau), ops),
                         verify::nrli1_triple_sum(w, eps, tau, 0.9)) < 1e-10);
    }
  }
}

TEST_CASE("NRLI1 minus OS18 is the g/h correction") {
  const TorusGrid g(32);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SpectralField w = random_initial_data(g, 1.0, seed);
    const double eps = 0.6, tau = 0.08;
    const OperatorSymbols ops(g, tau);
    const double e2t = eps * eps * tau;
    const SpectralField pw = apply_multiplier(w, ops.prop());
    const SpectralField correction = (-2.0 * I * e2t * g_zero_mode(w, ops)) * pw +
                                     (I * e2t) * apply_multiplier(h_field(w, ops), ops.prop());
    const SpectralField diff = nrli1_step(w, cfg_for(CubicScheme::NRLI1, eps, tau), ops) -
                               os18_step(w, cfg_for(CubicScheme::OS18, eps, tau), ops);
    CHECK(test::h1_gap(diff, correction) <= 1e-13);
  }
}

TEST_CASE("nonlinear increment scales with eps^2") {
  const TorusGrid g(32);
  const double tau = 0.05;
  const SpectralField w = random_initial_data(g, 1.0, 17);
  const SpectralField free = free_propagate(w, tau);
  for (auto s : {CubicScheme::NRLI1, CubicScheme::OS18}) {
    const SpectralField d1 = step(s, w, 0.3, tau) - free;
    const SpectralField d2 = step(s, w, 0.6, tau) - free;
    CHECK(test::h1_gap(d2, 4.0 * d1) <= 1e-12 * sobolev_norm(d2, 1.0));
  }
}

TEST_CASE("NRSLI2 on zero-mode data is the trapezoidal rule") {
  const TorusGrid g(16);
  const double eps = 0.8, tau = 0.1;
  const cplx c{0.6, 0.5};
  const cplx y = step(CubicScheme::NRSLI2, test::constant_field(g, c), eps, tau).zero_mode();
  const cplx rhs =
      c - 0.5 * I * tau * eps * eps * (std::norm(c) * c + std::norm(y) * y);
  CHECK(std::abs(y - rhs) < 1e-12);
}

TEST_CASE("NRSLI2 is symmetric; NRLI1, OS18 and the full-step variant are not") {
  const TorusGrid g(32);
  const double eps = 0.5, tau = 0.05, tol = 1e-12;
  const OperatorSymbols fwd(g, tau), bwd(g, -tau);
  double worst = 0, full_step_best = 1e300;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SpectralField w = random_initial_data(g, 1.0, seed);
    auto cfg = cfg_for(CubicScheme::NRSLI2, eps, tau);
    auto back = cfg_for(CubicScheme::NRSLI2, eps, -tau);
    worst = std::max(worst, test::h1_gap(nrsli2_step(nrsli2_step(w, cfg, fwd), back, bwd), w));
    cfg.nrsli2_weights = back.nrsli2_weights = ResonantWeights::FullStep;
    full_step_best = std::min(
        full_step_best, test::h1_gap(nrsli2_step(nrsli2_step(w, cfg, fwd), back, bwd), w));
  }
  CHECK(worst <= 10 * tol);
  CHECK(full_step_best > 1e-8);

  const SpectralField w = random_initial_data(g, 1.0, 0);
  for (auto s : {CubicScheme::NRLI1, CubicScheme::OS18}) {
    const SpectralField there = cubic_step(w, cfg_for(s, eps, tau), fwd);
    CHECK(test::h1_gap(cubic_step(there, cfg_for(s, eps, -tau), bwd), w) >= 1e-6);
  }
}

TEST_CASE("Strang splitting") {
  const TorusGrid g(32);
  const double eps = 0.9, tau = 0.05;
  const cplx c{0.3, -1.1};
  const SpectralField out = step(CubicScheme::Strang, test::constant_field(g, c), eps, tau);
  CHECK(test::h1_gap(out, test::constant_field(g, c * std::polar(1.0, -tau * eps * eps *
                                                                        std::norm(c)))) < 1e-15);

  SpectralField w = random_initial_data(g, 1.0, 4);
  const double m0 = sobolev_norm(w, 0.0);
  const OperatorSymbols ops(g, tau);
  const auto cfg = cfg_for(CubicScheme::Strang, eps, tau);
  double worst_step = 0;
  for (int n = 0; n < 10000; ++n) {
    const double before = sobolev_norm(w, 0.0);
    w = strang_step(w, cfg, ops);
    worst_step = std::max(worst_step, std::abs(sobolev_norm(w, 0.0) - before) / before);
  }
  CHECK(worst_step <= 1e-12);
  CHECK(std::abs(sobolev_norm(w, 0.0) - m0) / m0 <= 1e-9);
}

TEST_CASE("local error orders against the exact flow") {
  const TorusGrid g(32);
  const double eps = 1.0;
  const SpectralField w = test::scaled_random(g, 5.0, 6, 1.0);
  struct Case {
    CubicScheme scheme;
    double order;
  };
  for (auto [scheme, order] : {Case{CubicScheme::NRLI1, 2.0}, Case{CubicScheme::OS18, 2.0},
                               Case{CubicScheme::NRSLI2, 3.0}, Case{CubicScheme::Strang, 3.0}}) {
    std::vector<double> taus, errs;
    for (int k = 4; k <= 10; ++k) {
      const double tau = 0.1 * std::ldexp(1.0, -k);
      taus.push_back(tau);
      errs.push_back(test::h1_gap(step(scheme, w, eps, tau, 1e-15),
                                  verify::lawson_rk4_flow(w, verify::Nonlinearity::Cubic, eps,
                                                          tau, 4)));
    }
    INFO("scheme " << static_cast<int>(scheme));
    CHECK(test::loglog_slope(taus, errs) == doctest::Approx(order).epsilon(0.1 / order));
  }
}
