#include "lowreg/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <string>

#include "lowreg/errors.hpp"

namespace lowreg {
namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan backward;
};

// Planning is not thread-safe in FFTW, execution through the new-array
// interface is. Plans live for the lifetime of the process.
const PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<cplx> a(n), b(n);
  auto* in = reinterpret_cast<fftw_complex*>(a.data());
  auto* out = reinterpret_cast<fftw_complex*>(b.data());
  const int len = static_cast<int>(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p{fftw_plan_dft_1d(len, in, out, FFTW_FORWARD, flags),
             fftw_plan_dft_1d(len, in, out, FFTW_BACKWARD, flags)};
  return cache.emplace(n, p).first->second;
}

// (-1)^l: the grid starts at x_0 = -pi, so e^{-i l x_j} = (-1)^l e^{-2 pi i l j / N}.
double parity_sign(int l) { return (l % 2 == 0) ? 1.0 : -1.0; }

} // namespace

SpectralField forward_transform(std::span<const cplx> values, const TorusGrid& grid) {
  const std::size_t n = grid.n_modes();
  if (values.size() != n) {
    throw ArgumentError("forward_transform: expected " + std::to_string(n) +
                        " samples, got " + std::to_string(values.size()));
  }
  std::vector<cplx> in(values.begin(), values.end()), out(n);
  fftw_execute_dft(plans_for(n).forward, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));

  std::vector<cplx> coeffs(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int l = grid.mode(k);
    const std::size_t slot = static_cast<std::size_t>(l < 0 ? l + static_cast<int>(n) : l);
    coeffs[k] = out[slot] * (parity_sign(l) * inv_n);
  }
  return SpectralField(grid, std::move(coeffs));
}

std::vector<cplx> inverse_transform(const SpectralField& field) {
  const TorusGrid& grid = field.grid();
  const std::size_t n = grid.n_modes();
  std::vector<cplx> in(n), out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int l = grid.mode(k);
    const std::size_t slot = static_cast<std::size_t>(l < 0 ? l + static_cast<int>(n) : l);
    in[slot] = field.coeffs()[k] * parity_sign(l);
  }
  fftw_execute_dft(plans_for(n).backward, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

} // namespace lowreg
