#include "lowreg/verify/oracles.hpp"

#include <cmath>

#include "lowreg/errors.hpp"
#include "lowreg/random_data.hpp"
#include "lowreg/transform.hpp"

namespace lowreg::verify {
namespace {

constexpr cplx I{0.0, 1.0};

// int_0^tau e^{i s omega} ds
cplx oscillatory_integral(double omega, double tau) {
  if (omega == 0.0) return tau;
  return (std::exp(I * (tau * omega)) - 1.0) / (I * omega);
}

// Twisted coefficients v_l = e^{i t l^2} w_l.
std::vector<cplx> untwist(const SpectralField& w, double t) {
  const TorusGrid& g = w.grid();
  std::vector<cplx> v(g.n_modes());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double l = g.mode(k);
    v[k] = std::exp(I * (t * l * l)) * w.coeffs()[k];
  }
  return v;
}

// w_l = e^{-i t l^2} v_l
SpectralField twist(const TorusGrid& g, const std::vector<cplx>& v, double t) {
  SpectralField w(g);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double l = g.mode(k);
    w.coeffs()[k] = std::exp(-I * (t * l * l)) * v[k];
  }
  return w;
}

} // namespace

SpectralField band_limited_random(const TorusGrid& grid, int lo, int hi, double theta,
                                  std::uint64_t seed) {
  SplitMix64 rng(seed);
  SpectralField out(grid);
  for (int l = lo; l <= hi; ++l) {
    if (!grid.contains(l)) throw ArgumentError("band_limited_random: band outside grid");
    const double re = rng.uniform();
    const double im = rng.uniform();
    const double bracket = l == 0 ? 1.0 : std::abs(static_cast<double>(l));
    out.coeff(l) = std::pow(bracket, -theta) * cplx{re, im};
  }
  return out;
}

SpectralField li1_double_sum(const SpectralField& w, double eps, double tau, double t_n) {
  const TorusGrid& g = w.grid();
  const auto v = untwist(w, t_n);
  std::vector<cplx> integral(g.n_modes(), 0.0);
  for (int l1 = g.min_mode(); l1 <= g.max_mode(); ++l1) {
    for (int l2 = g.min_mode(); l2 <= g.max_mode(); ++l2) {
      const cplx c = v[g.index(l1)] * v[g.index(l2)];
      if (c == 0.0) continue;
      const int l = l1 + l2;
      if (!g.contains(l)) throw ArgumentError("li1_double_sum: product aliases");
      const double omega = double(l) * l - double(l1) * l1 - double(l2) * l2;
      integral[g.index(l)] += std::exp(I * (t_n * omega)) * oscillatory_integral(omega, tau) * c;
    }
  }
  std::vector<cplx> next(v);
  for (std::size_t k = 0; k < next.size(); ++k) next[k] -= I * eps * integral[k];
  return twist(g, next, t_n + tau);
}

SpectralField li1_conj_double_sum(const SpectralField& w, double eps, double tau,
                                  double t_n) {
  const TorusGrid& g = w.grid();
  const auto v = untwist(w, t_n);
  std::vector<cplx> integral(g.n_modes(), 0.0);
  for (int l1 = g.min_mode(); l1 <= g.max_mode(); ++l1) {
    for (int l2 = g.min_mode(); l2 <= g.max_mode(); ++l2) {
      const cplx c = std::conj(v[g.index(l1)]) * v[g.index(l2)];
      if (c == 0.0) continue;
      const int l = l2 - l1;
      if (!g.contains(l)) throw ArgumentError("li1_conj_double_sum: product aliases");
      const double omega = double(l) * l + double(l1) * l1 - double(l2) * l2;
      integral[g.index(l)] += std::exp(I * (t_n * omega)) * oscillatory_integral(omega, tau) * c;
    }
  }
  std::vector<cplx> next(v);
  for (std::size_t k = 0; k < next.size(); ++k) next[k] -= I * eps * integral[k];
  return twist(g, next, t_n + tau);
}

SpectralField nrli1_triple_sum(const SpectralField& w, double eps, double tau, double t_n) {
  const TorusGrid& g = w.grid();
  const auto v = untwist(w, t_n);
  std::vector<cplx> integral(g.n_modes(), 0.0);
  for (int l1 = g.min_mode(); l1 <= g.max_mode(); ++l1) {
    const cplx a = std::conj(v[g.index(l1)]);
    const double q = 2.0 * double(l1) * l1;
    const cplx approx = oscillatory_integral(q, tau);
    for (int l2 = g.min_mode(); l2 <= g.max_mode(); ++l2) {
      for (int l3 = g.min_mode(); l3 <= g.max_mode(); ++l3) {
        const cplx c = a * v[g.index(l2)] * v[g.index(l3)];
        const int raw = -l1 + l2 + l3;
        const int l = g.wrap(raw);
        const double omega =
            double(l) * l + double(l1) * l1 - double(l2) * l2 - double(l3) * l3;
        const bool resonant = raw == l && omega == 0.0;
        const cplx weight = resonant ? cplx{tau, 0.0} : approx;
        integral[g.index(l)] += std::exp(I * (t_n * omega)) * weight * c;
      }
    }
  }
  std::vector<cplx> next(v);
  for (std::size_t k = 0; k < next.size(); ++k) next[k] -= I * eps * eps * integral[k];
  return twist(g, next, t_n + tau);
}

SpectralField lawson_rk4_flow(const SpectralField& w0, Nonlinearity kind, double eps,
                              double t, long substeps) {
  const TorusGrid& g = w0.grid();
  const double c = kind == Nonlinearity::Cubic ? eps * eps : eps;
  // v' = -i c e^{-i s d_xx} N(e^{i s d_xx} v)
  auto rhs = [&](double s, const std::vector<cplx>& v) {
    const SpectralField w = twist(g, v, s);
    auto u = inverse_transform(w);
    for (cplx& z : u) {
      switch (kind) {
        case Nonlinearity::Square: z = z * z; break;
        case Nonlinearity::ModulusSquare: z = std::norm(z); break;
        case Nonlinearity::Cubic: z = std::norm(z) * z; break;
      }
    }
    auto n = untwist(forward_transform(u, g), s);
    for (cplx& z : n) z *= -I * c;
    return n;
  };
  auto axpy = [](const std::vector<cplx>& x, double a, const std::vector<cplx>& y) {
    std::vector<cplx> out(x);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a * y[k];
    return out;
  };

  std::vector<cplx> v(w0.coeffs().begin(), w0.coeffs().end());
  const double h = substeps > 0 ? t / static_cast<double>(substeps) : 0.0;
  for (long n = 0; n < substeps; ++n) {
    const double s = n * h;
    const auto k1 = rhs(s, v);
    const auto k2 = rhs(s + h / 2, axpy(v, h / 2, k1));
    const auto k3 = rhs(s + h / 2, axpy(v, h / 2, k2));
    const auto k4 = rhs(s + h, axpy(v, h, k3));
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
  }
  return twist(g, v, t);
}

cplx scalar_rk4(const std::function<cplx(cplx)>& f, cplx z0, double t, long substeps) {
  const double h = t / static_cast<double>(substeps);
  cplx z = z0;
  for (long n = 0; n < substeps; ++n) {
    const cplx k1 = f(z);
    const cplx k2 = f(z + 0.5 * h * k1);
    const cplx k3 = f(z + 0.5 * h * k2);
    const cplx k4 = f(z + h * k3);
    z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return z;
}

} // namespace lowreg::verify
