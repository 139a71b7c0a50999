#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lowreg/field.hpp"
#include "lowreg/stepper.hpp"

namespace lowreg {

struct SimParams {
  Equation equation = Equation::Cubic;
  Scheme scheme = Scheme::NRLI1;
  double eps = 1.0;
  double tau = 0.1;
  double t_final = 0.0;
  std::size_t n_modes = 128;
  double theta = 5.0;
  std::uint64_t seed = 0;
  double error_norm_r = 1.0;
  SolverSettings solver;

  /// Throws ArgumentError on eps outside (0, 1], tau <= 0, t_final < 0,
  /// theta < 0, error_norm_r < 0 or an equation/scheme mismatch.
  void validate() const;
  TorusGrid grid() const { return TorusGrid(n_modes); }
  /// round(t_final / tau)
  long steps() const;
  /// steps() * tau, the horizon actually reached.
  double actual_t_final() const { return static_cast<double>(steps()) * tau; }
};

/// T/eps for the quadratic equations, T/eps^2 for the cubic one.
double long_time_horizon(Equation equation, double T, double eps);

/// Initial data of a run: random_initial_data(grid, theta, seed).
SpectralField initial_data(const SimParams& params);

struct TrajectoryResult {
  SpectralField final_state;
  long steps = 0;
  double t_final = 0.0;
  /// States at the requested times, each snapped to the nearest step.
  std::vector<SpectralField> snapshots;
  std::vector<double> snapshot_times;
  int fp_iter_max = 0;
  double fp_iter_mean = 0.0;
  /// max_n ||w^n||_1 along the trajectory (including w^0).
  double max_h1_norm = 0.0;
};

/// Advances round(t_final/tau) steps of params.scheme. Solver failures are
/// rethrown with the step index attached.
TrajectoryResult run_trajectory(const SimParams& params, const SpectralField& w0,
                                std::span<const double> snapshot_times = {});

/// Matching symmetric scheme (SLI2 / NRSLI2) integrated to
/// params.actual_t_final() with steps of size at most ref_tau.
SpectralField reference_solution(const SimParams& params, const SpectralField& w0,
                                 double ref_tau);

/// Reference states at each of `times` (ascending, >= 0).
std::vector<SpectralField> reference_trajectory(const SimParams& params,
                                                const SpectralField& w0, double ref_tau,
                                                std::span<const double> times);

struct SweepRecord {
  SimParams params;       ///< t_final holds the horizon actually reached
  double error = 0.0;     ///< ||w^n - w_ref||_r
  double ref_tau = 0.0;
  double wall_seconds = 0.0;
  int fp_iter_max = 0;
  double fp_iter_mean = 0.0;
  /// ||ref(ref_tau) - ref(ref_tau/2)||_r, or 0 when not checked.
  double ref_self_error = 0.0;
  /// False when error < dominance_factor * ref_self_error.
  bool reliable = true;
  double max_h1_norm = 0.0;
};

struct OrderFit {
  std::string abscissa;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;  ///< log(error) - fitted line
  std::size_t n_points = 0;
};

/// Least-squares slope of log(error) against log(abscissa).
/// Needs >= 3 points with positive coordinates, else ArgumentError.
OrderFit fit_order(std::span<const std::pair<double, double>> points,
                   std::string abscissa = "tau");

/// Memoises reference solutions across sweeps that share data and horizon.
class ReferenceCache {
public:
  struct Entry {
    SpectralField field;
    double self_error;
  };
  using Key = std::string;
  /// Everything the reference depends on: data, equation, eps, horizon,
  /// step, solver settings and the self-check norm.
  static Key key(const SimParams& params, double ref_tau, bool checked);

  std::optional<Entry> find(const Key& key) const;
  void store(const Key& key, Entry entry);

private:
  mutable std::mutex mutex_;
  std::map<Key, Entry> entries_;
};

struct SweepOptions {
  /// Reference step; 0 selects min(tau)/100.
  double ref_tau = 0.0;
  /// Also integrate at ref_tau/2 and flag records the reference cannot resolve.
  bool check_reference = true;
  double dominance_factor = 10.0;
  unsigned jobs = 1;
  ReferenceCache* cache = nullptr;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::optional<OrderFit> fit;
};

/// One record per eps with horizon long_time_horizon(equation, T, eps);
/// fit of log(error) vs log(eps). eps_list needs >= 3 decreasing values.
SweepResult sweep_eps(const SimParams& base, std::span<const double> eps_list, double T,
                      const SweepOptions& options = {});

/// One record per tau at the fixed horizon base.t_final; fit in tau.
/// tau_list needs >= 4 values.
SweepResult sweep_tau(const SimParams& base, std::span<const double> tau_list,
                      const SweepOptions& options = {});

/// Error against the reference at each sample time (increasing, within
/// [0, base.t_final]); base.t_final is ignored beyond that check.
std::vector<SweepRecord> error_vs_time(const SimParams& base,
                                       std::span<const double> sample_times,
                                       const SweepOptions& options = {});

/// Single point: run to base.t_final and measure against the reference.
SweepRecord simulate(const SimParams& base, const SweepOptions& options = {});
/// Same from caller-supplied initial data (seed and theta are then only labels).
SweepRecord simulate(const SimParams& base, const SpectralField& w0,
                     const SweepOptions& options = {});

/// Runs fn(0), ..., fn(n-1) on up to `jobs` threads. The first exception (by
/// index) is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace lowreg
