#include "lowreg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <thread>

#include "lowreg/errors.hpp"
#include "lowreg/norms.hpp"
#include "lowreg/random_data.hpp"

namespace lowreg {

void SimParams::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ArgumentError("eps must lie in (0, 1], got " + std::to_string(eps));
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ArgumentError("tau must be > 0, got " + std::to_string(tau));
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw ArgumentError("t_final must be >= 0, got " + std::to_string(t_final));
  }
  if (!(theta >= 0.0)) throw ArgumentError("theta must be >= 0");
  if (!(error_norm_r >= 0.0)) throw ArgumentError("error_norm_r must be >= 0");
  if (!compatible(equation, scheme)) {
    throw ArgumentError("scheme " + std::string(to_string(scheme)) +
                        " does not apply to the " + std::string(to_string(equation)) +
                        " equation");
  }
  (void)grid();
}

long SimParams::steps() const { return std::lround(t_final / tau); }

double long_time_horizon(Equation equation, double T, double eps) {
  if (!(eps > 0.0)) throw ArgumentError("long_time_horizon: eps must be > 0");
  return is_quadratic(equation) ? T / eps : T / (eps * eps);
}

SpectralField initial_data(const SimParams& params) {
  return random_initial_data(params.grid(), params.theta, params.seed);
}

TrajectoryResult run_trajectory(const SimParams& params, const SpectralField& w0,
                                std::span<const double> snapshot_times) {
  params.validate();
  require_same_grid(params.grid(), w0.grid(), "run_trajectory");
  const long steps = params.steps();

  std::vector<long> snap_steps;
  for (double t : snapshot_times) {
    const long k = std::lround(t / params.tau);
    if (t < 0.0 || k > steps) {
      throw ArgumentError("run_trajectory: snapshot time " + std::to_string(t) +
                          " outside [0, t_final]");
    }
    if (!snap_steps.empty() && k < snap_steps.back()) {
      throw ArgumentError("run_trajectory: snapshot times must be increasing");
    }
    snap_steps.push_back(k);
  }

  const Stepper stepper(params.equation, params.scheme, params.eps, params.tau, w0.grid(),
                        params.solver);
  TrajectoryResult result{w0, steps, params.actual_t_final(), {}, {}, 0, 0.0,
                          sobolev_norm(w0, 1.0)};
  std::size_t next_snap = 0;
  auto take_snapshots = [&](long n) {
    while (next_snap < snap_steps.size() && snap_steps[next_snap] == n) {
      result.snapshots.push_back(result.final_state);
      result.snapshot_times.push_back(static_cast<double>(n) * params.tau);
      ++next_snap;
    }
  };
  take_snapshots(0);

  long iter_total = 0;
  for (long n = 0; n < steps; ++n) {
    SolveStats stats;
    try {
      result.final_state = stepper.step(result.final_state, &stats);
    } catch (const SolverFailure& e) {
      throw e.at_step(n);
    }
    iter_total += stats.iterations;
    result.fp_iter_max = std::max(result.fp_iter_max, stats.iterations);
    result.max_h1_norm = std::max(result.max_h1_norm, sobolev_norm(result.final_state, 1.0));
    take_snapshots(n + 1);
  }
  if (steps > 0 && is_implicit(params.scheme)) {
    result.fp_iter_mean = static_cast<double>(iter_total) / static_cast<double>(steps);
  }
  return result;
}

std::vector<SpectralField> reference_trajectory(const SimParams& params,
                                                const SpectralField& w0, double ref_tau,
                                                std::span<const double> times) {
  params.validate();
  if (!(ref_tau > 0.0) || ref_tau > params.tau / 10.0) {
    throw ArgumentError("reference: ref_tau must lie in (0, tau/10], got " +
                        std::to_string(ref_tau));
  }
  const Scheme scheme = symmetric_scheme(params.equation);
  std::vector<SpectralField> out;
  SpectralField state = w0;
  double t = 0.0;
  long steps_done = 0;
  for (double target : times) {
    if (target < t) throw ArgumentError("reference: times must be increasing and >= 0");
    const double span = target - t;
    const long n = static_cast<long>(std::ceil(span / ref_tau - 1e-9));
    if (n > 0) {
      const Stepper stepper(params.equation, scheme, params.eps, span / static_cast<double>(n),
                            w0.grid(), params.solver);
      for (long k = 0; k < n; ++k) {
        try {
          state = stepper.step(state);
        } catch (const SolverFailure& e) {
          throw e.at_step(steps_done + k);
        }
      }
      steps_done += n;
    }
    t = target;
    out.push_back(state);
  }
  return out;
}

SpectralField reference_solution(const SimParams& params, const SpectralField& w0,
                                 double ref_tau) {
  const double t = params.actual_t_final();
  return reference_trajectory(params, w0, ref_tau, std::span<const double>(&t, 1)).front();
}

OrderFit fit_order(std::span<const std::pair<double, double>> points, std::string abscissa) {
  if (points.size() < 3) throw ArgumentError("fit_order: need at least 3 points");
  std::vector<double> x, y;
  for (const auto& [a, e] : points) {
    if (!(a > 0.0) || !(e > 0.0)) {
      throw ArgumentError("fit_order: abscissa and error must be positive");
    }
    x.push_back(std::log(a));
    y.push_back(std::log(e));
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (sxx == 0.0) throw ArgumentError("fit_order: abscissae must not all coincide");
  OrderFit fit;
  fit.abscissa = std::move(abscissa);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_points = x.size();
  for (std::size_t k = 0; k < x.size(); ++k) {
    fit.residuals.push_back(y[k] - (fit.intercept + fit.slope * x[k]));
  }
  return fit;
}

ReferenceCache::Key ReferenceCache::key(const SimParams& p, double ref_tau, bool checked) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d|%a|%zu|%a|%llu|%a|%a|%a|%d|%d|%d|%a",
                static_cast<int>(p.equation), p.eps, p.n_modes, p.theta,
                static_cast<unsigned long long>(p.seed), p.actual_t_final(), ref_tau,
                p.solver.fp_tol, p.solver.fp_max_iter, p.solver.dealias ? 1 : 0,
                checked ? 1 : 0, p.error_norm_r);
  return buf;
}

std::optional<ReferenceCache::Entry> ReferenceCache::find(const Key& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ReferenceCache::store(const Key& key, Entry entry) {
  std::lock_guard lock(mutex_);
  entries_.insert_or_assign(key, std::move(entry));
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto run_one = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double default_ref_tau(std::span<const double> taus) {
  return *std::min_element(taus.begin(), taus.end()) / 100.0;
}

ReferenceCache::Entry compute_reference(const SimParams& params, const SpectralField& w0,
                                        double ref_tau, const SweepOptions& options) {
  std::optional<ReferenceCache::Key> key;
  if (options.cache) {
    key = ReferenceCache::key(params, ref_tau, options.check_reference);
    if (auto hit = options.cache->find(*key)) return *hit;
  }
  ReferenceCache::Entry entry{reference_solution(params, w0, ref_tau), 0.0};
  if (options.check_reference && params.steps() > 0) {
    const SpectralField finer = reference_solution(params, w0, ref_tau / 2.0);
    entry.self_error = sobolev_distance(entry.field, finer, params.error_norm_r);
  }
  if (key) options.cache->store(*key, entry);
  return entry;
}

SweepRecord measure(const SimParams& params, const SpectralField& w0, double ref_tau,
                    const SweepOptions& options) {
  const auto start = Clock::now();
  const TrajectoryResult run = run_trajectory(params, w0);
  const double wall = std::chrono::duration<double>(Clock::now() - start).count();
  const ReferenceCache::Entry ref = compute_reference(params, w0, ref_tau, options);

  SweepRecord rec;
  rec.params = params;
  rec.params.t_final = run.t_final;
  rec.error = sobolev_distance(run.final_state, ref.field, params.error_norm_r);
  rec.ref_tau = ref_tau;
  rec.wall_seconds = wall;
  rec.fp_iter_max = run.fp_iter_max;
  rec.fp_iter_mean = run.fp_iter_mean;
  rec.ref_self_error = ref.self_error;
  rec.reliable = rec.error >= options.dominance_factor * ref.self_error;
  rec.max_h1_norm = run.max_h1_norm;
  return rec;
}

std::optional<OrderFit> fit_records(const std::vector<SweepRecord>& records,
                                    bool by_eps) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records) {
    if (!(r.error > 0.0)) return std::nullopt;
    pts.emplace_back(by_eps ? r.params.eps : r.params.tau, r.error);
  }
  if (pts.size() < 3) return std::nullopt;
  return fit_order(pts, by_eps ? "eps" : "tau");
}

} // namespace

SweepRecord simulate(const SimParams& base, const SweepOptions& options) {
  base.validate();
  const double ref_tau = options.ref_tau > 0.0 ? options.ref_tau : base.tau / 100.0;
  return measure(base, initial_data(base), ref_tau, options);
}

SweepRecord simulate(const SimParams& base, const SpectralField& w0,
                     const SweepOptions& options) {
  base.validate();
  require_same_grid(base.grid(), w0.grid(), "simulate");
  const double ref_tau = options.ref_tau > 0.0 ? options.ref_tau : base.tau / 100.0;
  SweepOptions uncached = options;
  uncached.cache = nullptr;  // the cache key assumes seeded data
  return measure(base, w0, ref_tau, uncached);
}

SweepResult sweep_eps(const SimParams& base, std::span<const double> eps_list, double T,
                      const SweepOptions& options) {
  if (eps_list.size() < 3) throw ArgumentError("sweep_eps: need at least 3 eps values");
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    if (!(eps_list[k] > 0.0 && eps_list[k] <= 1.0)) {
      throw ArgumentError("sweep_eps: eps values must lie in (0, 1]");
    }
    if (k > 0 && !(eps_list[k] < eps_list[k - 1])) {
      throw ArgumentError("sweep_eps: eps values must be decreasing");
    }
  }
  if (!(T > 0.0)) throw ArgumentError("sweep_eps: T must be > 0");
  base.validate();
  const SpectralField w0 = initial_data(base);
  const double ref_tau = options.ref_tau > 0.0 ? options.ref_tau : base.tau / 100.0;

  SweepResult result;
  result.records.resize(eps_list.size());
  parallel_for(eps_list.size(), options.jobs, [&](std::size_t k) {
    SimParams p = base;
    p.eps = eps_list[k];
    p.t_final = long_time_horizon(base.equation, T, p.eps);
    result.records[k] = measure(p, w0, ref_tau, options);
  });
  result.fit = fit_records(result.records, true);
  return result;
}

SweepResult sweep_tau(const SimParams& base, std::span<const double> tau_list,
                      const SweepOptions& options) {
  if (tau_list.size() < 4) throw ArgumentError("sweep_tau: need at least 4 tau values");
  for (double tau : tau_list) {
    if (!(tau > 0.0)) throw ArgumentError("sweep_tau: tau values must be > 0");
  }
  base.validate();
  const SpectralField w0 = initial_data(base);
  const double ref_tau = options.ref_tau > 0.0 ? options.ref_tau : default_ref_tau(tau_list);

  SweepResult result;
  result.records.resize(tau_list.size());
  parallel_for(tau_list.size(), options.jobs, [&](std::size_t k) {
    SimParams p = base;
    p.tau = tau_list[k];
    result.records[k] = measure(p, w0, ref_tau, options);
  });
  result.fit = fit_records(result.records, false);
  return result;
}

std::vector<SweepRecord> error_vs_time(const SimParams& base,
                                       std::span<const double> sample_times,
                                       const SweepOptions& options) {
  base.validate();
  if (sample_times.empty()) throw ArgumentError("error_vs_time: no sample times");
  for (std::size_t k = 0; k < sample_times.size(); ++k) {
    if (sample_times[k] < 0.0 || sample_times[k] > base.t_final + 0.5 * base.tau) {
      throw ArgumentError("error_vs_time: sample times must lie in [0, t_final]");
    }
    if (k > 0 && !(sample_times[k] > sample_times[k - 1])) {
      throw ArgumentError("error_vs_time: sample times must be increasing");
    }
  }
  const SpectralField w0 = initial_data(base);
  const double ref_tau = options.ref_tau > 0.0 ? options.ref_tau : base.tau / 100.0;

  SimParams run_params = base;
  run_params.t_final = sample_times.back();
  const auto start = Clock::now();
  const TrajectoryResult run = run_trajectory(run_params, w0, sample_times);
  const double wall = std::chrono::duration<double>(Clock::now() - start).count();

  const auto& times = run.snapshot_times;
  const auto ref = reference_trajectory(run_params, w0, ref_tau, times);
  std::vector<SpectralField> finer;
  if (options.check_reference) {
    finer = reference_trajectory(run_params, w0, ref_tau / 2.0, times);
  }

  std::vector<SweepRecord> records;
  for (std::size_t k = 0; k < times.size(); ++k) {
    SweepRecord rec;
    rec.params = base;
    rec.params.t_final = times[k];
    rec.error = sobolev_distance(run.snapshots[k], ref[k], base.error_norm_r);
    rec.ref_tau = ref_tau;
    rec.wall_seconds = wall;
    rec.fp_iter_max = run.fp_iter_max;
    rec.fp_iter_mean = run.fp_iter_mean;
    if (options.check_reference) {
      rec.ref_self_error = sobolev_distance(ref[k], finer[k], base.error_norm_r);
    }
    rec.reliable = rec.error >= options.dominance_factor * rec.ref_self_error;
    rec.max_h1_norm = sobolev_norm(run.snapshots[k], 1.0);
    records.push_back(std::move(rec));
  }
  return records;
}

} // namespace lowreg
