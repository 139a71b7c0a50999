#include <doctest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "lowreg/errors.hpp"
#include "lowreg/field_io.hpp"
#include "lowreg/operators.hpp"
#include "lowreg/transform.hpp"
#include "support.hpp"

using namespace lowreg;
using lowreg::test::I;

namespace {

std::vector<cplx> samples_of(const TorusGrid& g, auto&& f) {
  std::vector<cplx> v(g.n_modes());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(g.point(j));
  return v;
}

double l2(const std::vector<cplx>& v) {
  double s = 0;
  for (auto z : v) s += std::norm(z);
  return std::sqrt(s);
}

// e^z - 1 in long double: Taylor series near the origin, exp elsewhere.
std::complex<long double> expm1_reference(cplx z) {
  const std::complex<long double> zl(z.real(), z.imag());
  if (std::abs(zl) < 0.5L) {
    std::complex<long double> term = zl, sum = 0;
    for (int k = 1; k < 40; ++k) {
      sum += term;
      term *= zl / static_cast<long double>(k + 1);
    }
    return sum;
  }
  return std::exp(zl) - 1.0L;
}

} // namespace

TEST_CASE("grid geometry") {
  const TorusGrid g(8);
  CHECK(g.n_modes() == 8);
  CHECK(g.min_mode() == -4);
  CHECK(g.max_mode() == 3);
  CHECK(g.contains(0));
  CHECK(g.modes().size() == 8);
  CHECK(g.point(0) == doctest::Approx(-std::numbers::pi));
  CHECK(g.point(4) == doctest::Approx(0.0));
  CHECK(g.wrap(4) == -4);
  CHECK(g.wrap(-5) == 3);
  CHECK(g.wrap(11) == 3);
  CHECK_THROWS_AS(TorusGrid(7), ArgumentError);
  CHECK_THROWS_AS(TorusGrid(2), ArgumentError);
  CHECK_NOTHROW(TorusGrid(12));
}

TEST_CASE("field container") {
  const TorusGrid g(8);
  CHECK_THROWS_AS(SpectralField(g, std::vector<cplx>(7)), ArgumentError);
  SpectralField a(g), b(g);
  a.coeff(1) = 2.0;
  b.coeff(1) = 3.0;
  CHECK((a + b).coeff(1) == cplx(5.0));
  CHECK((b - a).coeff(1) == cplx(1.0));
  CHECK((cplx(2.0) * a).coeff(1) == cplx(4.0));
  CHECK_THROWS_AS(a += SpectralField(TorusGrid(16)), ArgumentError);
}

TEST_CASE("forward transform examples") {
  const TorusGrid g(8);
  const SpectralField zero = forward_transform(std::vector<cplx>(8), g);
  for (auto c : zero.coeffs()) CHECK(c == cplx(0.0));

  const cplx c{0.3, -1.2};
  const SpectralField cst = forward_transform(std::vector<cplx>(8, c), g);
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    CHECK(std::abs(cst.coeff(l) - (l == 0 ? c : cplx(0.0))) < 1e-15);
  }

  const SpectralField e1 =
      forward_transform(samples_of(g, [](double x) { return std::exp(I * x); }), g);
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    CHECK(std::abs(e1.coeff(l) - (l == 1 ? cplx(1.0) : cplx(0.0))) < 1e-15);
  }
  CHECK_THROWS_AS(forward_transform(std::vector<cplx>(7), g), ArgumentError);
}

TEST_CASE("inverse transform examples") {
  const TorusGrid g(16);
  for (auto v : inverse_transform(SpectralField(g))) CHECK(v == cplx(0.0));
  const cplx c{-0.5, 2.0};
  for (auto v : inverse_transform(test::constant_field(g, c))) CHECK(std::abs(v - c) < 1e-15);

  // Matches the defining sum, which also pins the sign of x_j.
  const SpectralField f = random_initial_data(g, 0.5, 3);
  const auto s = inverse_transform(f);
  for (std::size_t j = 0; j < g.n_modes(); ++j) {
    cplx direct = 0;
    for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
      direct += f.coeff(l) * std::exp(I * (l * g.point(j)));
    }
    CHECK(std::abs(direct - s[j]) < 1e-13);
  }
  const SpectralField back = forward_transform(s, g);
  CHECK(test::h1_gap(back, f) < 1e-12 * sobolev_norm(f, 1.0));
}

TEST_CASE("transform round trip, 100 fields over N in {8, 16, 64, 256}") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  double worst = 0;
  for (std::size_t n : {8u, 16u, 64u, 256u}) {
    const TorusGrid g(n);
    for (int k = 0; k < 25; ++k) {
      std::vector<cplx> v(n);
      for (auto& z : v) z = {gauss(rng), gauss(rng)};
      const SpectralField f = forward_transform(v, g);
      const SpectralField round = forward_transform(inverse_transform(f), g);
      worst = std::max(worst, sobolev_distance(f, round, 0.0) / sobolev_norm(f, 0.0));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("Parseval") {
  for (std::size_t n : {8u, 16u, 64u}) {
    const TorusGrid g(n);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SpectralField f = random_initial_data(g, 0.0, seed);
      const auto s = inverse_transform(f);
      const double grid_mean = l2(s) * l2(s) / static_cast<double>(n);
      const double n0 = sobolev_norm(f, 0.0);
      CHECK(std::abs(n0 * n0 - grid_mean) <= 1e-12 * grid_mean);
      CHECK(std::abs(mean_square(f) - grid_mean) <= 1e-12 * grid_mean);
    }
  }
}

TEST_CASE("operator symbols") {
  const TorusGrid g(32);
  const OperatorSymbols ops(g, 0.1);
  const auto idx0 = g.index(0);
  CHECK(ops.prop()[idx0] == cplx(1.0));
  CHECK(ops.inv_dx()[idx0] == cplx(0.0));
  CHECK(ops.phi1_2()[idx0] == cplx(1.0));
  CHECK(ops.phi1_1()[idx0] == cplx(1.0));
  CHECK(ops.phi1_1c()[idx0] == cplx(1.0));
  CHECK(ops.one_minus_phi1_2()[idx0] == cplx(0.0));
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const auto k = g.index(l);
    CHECK(std::abs(std::abs(ops.prop()[k]) - 1.0) < 1e-15);
    CHECK(std::abs(ops.prop()[k] * ops.prop_inv()[k] - 1.0) < 1e-15);
    if (g.contains(-l)) CHECK(ops.inv_dx()[g.index(-l)] == -ops.inv_dx()[k]);
    CHECK(std::abs(ops.phi1_2()[k] - phi1(cplx(0, 2 * 0.1 * l * l))) == 0.0);
    CHECK(std::abs(ops.phi1_1c()[k] - phi1(cplx(0, -0.1 * l * l))) == 0.0);
    CHECK(ops.one_minus_phi1_1()[k] == 1.0 - ops.phi1_1()[k]);
  }
  CHECK_THROWS_AS(OperatorSymbols(g, std::nan("")), ArgumentError);
  CHECK_THROWS_AS(apply_multiplier(SpectralField(TorusGrid(16)), ops.prop()), ArgumentError);
}

TEST_CASE("phi1 bounded on the imaginary axis") {
  for (double x = -1e4; x <= 1e4; x += 0.37) CHECK(std::abs(phi1(cplx(0, x))) <= 1.0 + 1e-15);
  CHECK(phi1(0.0) == cplx(1.0));
}

TEST_CASE("phi1 identity z phi1(z) = e^z - 1") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logr(-9.0, 3.0), angle(-std::numbers::pi,
                                                                std::numbers::pi);
  int n = 0;
  double worst = 0;
  while (n < 1000) {
    const cplx z = std::polar(std::pow(10.0, logr(rng)), angle(rng));
    if (z.real() > 700.0) continue;  // e^z would overflow
    const auto want = expm1_reference(z);
    const auto got = std::complex<long double>(z * phi1(z));
    worst = std::max(worst, static_cast<double>(std::abs(got - want) / std::abs(want)));
    ++n;
  }
  CHECK(worst <= 1e-12);

  // Both branches at the switchover radius.
  for (double a = 0; a < 6.3; a += 0.1) {
    const cplx z = std::polar(kPhi1SeriesCutoff, a);
    const cplx series = 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
    CHECK(std::abs(series - complex_expm1(z) / z) <= 1e-13);
  }
}

TEST_CASE("free propagation") {
  const TorusGrid g(16);
  const SpectralField f = random_initial_data(g, 1.0, 9);
  CHECK(free_propagate(f, 0.0) == f);

  const SpectralField one = test::single_mode(g, 1, 1.0);
  CHECK(std::abs(free_propagate(one, std::numbers::pi).coeff(1) + 1.0) < 1e-15);

  for (double t : {0.3, -1.7, 25.0}) {
    for (double r : {0.0, 1.0, 2.0}) {
      const double a = sobolev_norm(f, r), b = sobolev_norm(free_propagate(f, t), r);
      CHECK(std::abs(a - b) <= 1e-12 * a);
    }
  }
  const SpectralField st = free_propagate(f, 0.4 + 1.3);
  const SpectralField s_then_t = free_propagate(free_propagate(f, 0.4), 1.3);
  CHECK(sobolev_distance(st, s_then_t, 0.0) <= 1e-12 * sobolev_norm(f, 0.0));
}

TEST_CASE("antiderivative") {
  const TorusGrid g(16);
  CHECK(antiderivative(SpectralField(g)) == SpectralField(g));
  CHECK(antiderivative(test::constant_field(g, 5.0)) == SpectralField(g));
  CHECK(std::abs(antiderivative(test::single_mode(g, 1, 1.0)).coeff(1) - (-I)) < 1e-16);

  SpectralField f = random_initial_data(g, 0.0, 4);
  const cplx mean = f.zero_mode();
  CHECK(derivative(test::constant_field(g, mean)) == SpectralField(g));
  f.coeff(0) = 0.0;
  CHECK(sobolev_distance(antiderivative(derivative(f)), f, 0.0) < 1e-15);
  CHECK(sobolev_distance(derivative(antiderivative(f)), f, 0.0) < 1e-15);
}

TEST_CASE("phi1 of the Laplacian") {
  const TorusGrid g(16);
  const SpectralField f = random_initial_data(g, 1.0, 8);
  CHECK(apply_phi1_laplacian(f, 0.0) == f);
  const SpectralField c = test::constant_field(g, {1.5, -0.5});
  CHECK(apply_phi1_laplacian(c, cplx(0.3, -2.0)) == c);

  const double tau = 0.1;
  const SpectralField m2 = apply_phi1_laplacian(test::single_mode(g, 2, 1.0), -2.0 * I * tau);
  const cplx z{0.0, 0.8};
  const cplx want = (std::exp(z) - 1.0) / z;
  CHECK(std::abs(m2.coeff(2) - want) < 1e-15);
  // Series 1 + z/2 + z^2/6 + ... to the z^15 term.
  cplx series = 0, term = 1;
  for (int k = 1; k <= 16; ++k) {
    series += term;
    term *= z / static_cast<double>(k + 1);
  }
  CHECK(std::abs(m2.coeff(2) - series) < 1e-15);
}

TEST_CASE("conjugation acts pointwise") {
  const TorusGrid g(16);
  const SpectralField f = random_initial_data(g, 0.5, 12);
  auto s = inverse_transform(f);
  for (auto& z : s) z = std::conj(z);
  CHECK(sobolev_distance(conjugate(f), forward_transform(s, g), 0.0) < 1e-15);
}

TEST_CASE("two-thirds truncation") {
  const TorusGrid g(12);
  const SpectralField f = random_initial_data(g, 0.0, 1);
  const SpectralField t = truncate_two_thirds(f);
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    CHECK(t.coeff(l) == (3 * std::abs(l) > 12 ? cplx(0.0) : f.coeff(l)));
  }
}

TEST_CASE("Sobolev norm examples") {
  const TorusGrid g(16);
  CHECK(sobolev_norm(SpectralField(g), 1.5) == 0.0);
  CHECK(sobolev_norm(test::constant_field(g, 3.0), 1.0) == doctest::Approx(3.0));
  CHECK(sobolev_norm(test::single_mode(g, 1, 1.0), 1.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(sobolev_norm(SpectralField(g), -1.0), ArgumentError);
}

TEST_CASE("random initial data") {
  const TorusGrid g(64);
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const SpectralField f = random_initial_data(g, 0.0, seed);
    for (auto c : f.coeffs()) {
      CHECK(std::abs(c) <= std::sqrt(2.0));
      CHECK(c.real() >= 0.0);
      CHECK(c.real() <= 1.0);
      CHECK(c.imag() >= 0.0);
      CHECK(c.imag() <= 1.0);
    }
  }
  const SpectralField f2 = random_initial_data(g, 2.0, 7);
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const double bracket = l == 0 ? 1.0 : std::abs(l);
    CHECK(std::abs(f2.coeff(l)) <= std::sqrt(2.0) * std::pow(bracket, -2.0));
  }
  CHECK(random_initial_data(g, 2.0, 7) == f2);
  CHECK_FALSE(random_initial_data(g, 2.0, 8) == f2);
  CHECK_THROWS_AS(random_initial_data(g, -0.5, 1), ArgumentError);

  // Stream contract: ascending l, real part first.
  SplitMix64 rng(7);
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const double a = rng.uniform(), b = rng.uniform();
    const double bracket = l == 0 ? 1.0 : std::abs(l);
    CHECK(f2.coeff(l) == cplx(a, b) * std::pow(bracket, -2.0));
  }
}

TEST_CASE("SplitMix64 reference values") {
  // Published first outputs for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("field text format") {
  const TorusGrid g(16);
  const SpectralField f = random_initial_data(g, 1.0, 21);
  std::stringstream ss;
  write_field(ss, f);
  CHECK(read_field(ss) == f);

  std::istringstream gap("-2,0,0\n-1,0,0\n1,0,0\n0,0,0\n");
  CHECK_THROWS_AS(read_field(gap), ArgumentError);
  std::istringstream junk("-2,0,0\n-1,x,0\n0,0,0\n1,0,0\n");
  CHECK_THROWS_AS(read_field(junk), ArgumentError);
}
