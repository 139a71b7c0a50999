#pragma once

#include <cstdint>

#include "lowreg/field.hpp"

namespace lowreg {

/// SplitMix64. Small, seedable and identical on every platform, which is
/// what the initial-data stream contract needs.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// Random H^theta data: u_l = <l>^{-theta} (a + i b) with a, b ~ U[0, 1),
/// <l> = |l| for l != 0 and <0> = 1.
///
/// Stream order: modes in ascending l from -N/2, real part drawn before the
/// imaginary part. Throws ArgumentError for theta < 0.
SpectralField random_initial_data(const TorusGrid& grid, double theta, std::uint64_t seed);

} // namespace lowreg
