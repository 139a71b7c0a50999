#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lowreg/csv.hpp"
#include "lowreg/errors.hpp"
#include "lowreg/field_io.hpp"
#include "lowreg/verify/selftest.hpp"

namespace lowreg::cli {
namespace {

namespace fs = std::filesystem;

// Every value-carrying flag, by long name. The JSON config uses the same keys.
const std::vector<std::string> kValueFlags = {
    "equation", "scheme",  "eps",        "tau",    "tau-list", "eps-list",
    "sample-times", "theta", "seed",     "modes",  "T",        "t-final",
    "error-r",  "ref-tau", "fp-tol",     "fp-max-iter", "out", "jobs",
    "snapshot-dir"};

double to_double(const std::string& flag, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty()) {
    throw ArgumentError("--" + flag + ": cannot parse '" + text + "' as a number");
  }
  return v;
}

long long to_integer(const std::string& flag, const std::string& text, long long lo) {
  long long v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty()) {
    throw ArgumentError("--" + flag + ": cannot parse '" + text + "' as an integer");
  }
  if (v < lo) throw ArgumentError("--" + flag + " must be >= " + std::to_string(lo));
  return v;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<double> to_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text)) out.push_back(to_double(flag, part));
  if (out.empty()) throw ArgumentError("--" + flag + " must not be empty");
  return out;
}

std::string json_to_text(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string joined;
    for (const auto& item : v) {
      if (!joined.empty()) joined += ',';
      joined += json_to_text(key, item);
    }
    return joined;
  }
  throw ArgumentError("config key '" + key + "' must be a string, number or array");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("--config: cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("--config: " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("--config: top level must be an object");
  std::map<std::string, std::string> values;
  for (const auto& [key, v] : doc.items()) {
    if (std::find(kValueFlags.begin(), kValueFlags.end(), key) == kValueFlags.end()) {
      throw ArgumentError("--config: unknown key '" + key + "'");
    }
    values[key] = json_to_text(key, v);
  }
  return values;
}

Subcommand subcommand_from(const std::string& name) {
  if (name == "simulate") return Subcommand::Simulate;
  if (name == "sweep-tau") return Subcommand::SweepTau;
  if (name == "sweep-eps") return Subcommand::SweepEps;
  if (name == "error-vs-time") return Subcommand::ErrorVsTime;
  return Subcommand::Selftest;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("LOWREG_NLSE_JOBS"); env && *env) {
    try {
      return static_cast<unsigned>(to_integer("jobs", env, 1));
    } catch (const ArgumentError&) {
      throw ArgumentError("LOWREG_NLSE_JOBS: expected a positive integer, got '" +
                          std::string(env) + "'");
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_writable(const std::string& path) {
  const fs::path p(path);
  if (p.filename().empty()) throw ArgumentError("--out: '" + path + "' names a directory");
  const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw ArgumentError("--out: directory '" + dir.string() + "' does not exist");
  }
  if (fs::is_directory(p, ec)) throw ArgumentError("--out: '" + path + "' is a directory");
}

CliConfig build_config(Subcommand sub, std::map<std::string, std::string> values) {
  CliConfig cfg;
  cfg.subcommand = sub;
  cfg.jobs = values.count("jobs") ? static_cast<unsigned>(to_integer("jobs", values["jobs"], 1))
                                  : default_jobs();
  if (sub == Subcommand::Selftest) return cfg;

  auto require = [&](const std::string& flag) -> const std::string& {
    auto it = values.find(flag);
    if (it == values.end()) throw ArgumentError("missing required flag --" + flag);
    return it->second;
  };
  auto has = [&](const std::string& flag) { return values.count(flag) > 0; };

  SimParams& p = cfg.params;
  p.equation = parse_equation(require("equation"));
  for (const auto& name : split(require("scheme"))) {
    const Scheme s = parse_scheme(name);
    if (!compatible(p.equation, s)) {
      throw ArgumentError("--scheme: " + name + " does not apply to the " +
                          std::string(to_string(p.equation)) + " equation");
    }
    cfg.schemes.push_back(s);
  }
  if (cfg.schemes.empty()) throw ArgumentError("--scheme must not be empty");
  p.scheme = cfg.schemes.front();

  auto check_eps = [](const std::string& flag, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) {
      throw ArgumentError("--" + flag + " must lie in the interval (0, 1], got " +
                          format_double(eps));
    }
  };
  auto check_positive = [](const std::string& flag, double v) {
    if (!(v > 0.0 && std::isfinite(v))) throw ArgumentError("--" + flag + " must be > 0");
  };

  if (sub == Subcommand::SweepEps) {
    cfg.eps_list = to_list("eps-list", require("eps-list"));
    for (double e : cfg.eps_list) check_eps("eps-list", e);
    if (cfg.eps_list.size() < 3) throw ArgumentError("--eps-list needs at least 3 values");
    p.eps = cfg.eps_list.front();
  } else {
    p.eps = to_double("eps", require("eps"));
    check_eps("eps", p.eps);
  }
  if (sub == Subcommand::SweepTau) {
    cfg.tau_list = to_list("tau-list", require("tau-list"));
    for (double t : cfg.tau_list) check_positive("tau-list", t);
    if (cfg.tau_list.size() < 4) throw ArgumentError("--tau-list needs at least 4 values");
    p.tau = *std::min_element(cfg.tau_list.begin(), cfg.tau_list.end());
  } else {
    p.tau = to_double("tau", require("tau"));
    check_positive("tau", p.tau);
  }
  if (has("theta")) {
    p.theta = to_double("theta", values["theta"]);
    if (!(p.theta >= 0.0)) throw ArgumentError("--theta must be >= 0");
  }
  if (has("seed")) p.seed = static_cast<std::uint64_t>(to_integer("seed", values["seed"], 0));
  if (has("modes")) {
    p.n_modes = static_cast<std::size_t>(to_integer("modes", values["modes"], 4));
    if (p.n_modes % 2 != 0) throw ArgumentError("--modes must be even");
  }
  if (has("error-r")) {
    p.error_norm_r = to_double("error-r", values["error-r"]);
    if (!(p.error_norm_r >= 0.0)) throw ArgumentError("--error-r must be >= 0");
  }
  if (has("fp-tol")) {
    p.solver.fp_tol = to_double("fp-tol", values["fp-tol"]);
    check_positive("fp-tol", p.solver.fp_tol);
  }
  if (has("fp-max-iter")) {
    p.solver.fp_max_iter = static_cast<int>(to_integer("fp-max-iter", values["fp-max-iter"], 1));
  }
  if (has("ref-tau")) {
    cfg.ref_tau = to_double("ref-tau", values["ref-tau"]);
    check_positive("ref-tau", cfg.ref_tau);
    const double coarsest_fine = sub == Subcommand::SweepTau
                                     ? *std::min_element(cfg.tau_list.begin(), cfg.tau_list.end())
                                     : p.tau;
    if (cfg.ref_tau > coarsest_fine / 10.0) {
      throw ArgumentError("--ref-tau must be at most tau/10 = " +
                          format_double(coarsest_fine / 10.0));
    }
  }

  if (sub == Subcommand::Simulate) {
    p.t_final = to_double("t-final", require("t-final"));
    if (!(p.t_final >= 0.0)) throw ArgumentError("--t-final must be >= 0");
    if (has("T")) throw ArgumentError("--T applies to the long-time subcommands; use --t-final");
    if (has("snapshot-dir")) cfg.snapshot_dir = values["snapshot-dir"];
  } else {
    if (has("t-final")) throw ArgumentError("--t-final applies to simulate only; use --T");
    cfg.T = has("T") ? to_double("T", values["T"]) : (is_quadratic(p.equation) ? 1.0 : 0.5);
    check_positive("T", cfg.T);
    p.t_final = long_time_horizon(p.equation, cfg.T, p.eps);
    if (has("snapshot-dir")) throw ArgumentError("--snapshot-dir applies to simulate only");
  }
  if (sub == Subcommand::ErrorVsTime) {
    cfg.sample_times = to_list("sample-times", require("sample-times"));
    for (std::size_t k = 0; k < cfg.sample_times.size(); ++k) {
      const double t = cfg.sample_times[k];
      if (!(t >= 0.0) || t > p.t_final + 0.5 * p.tau) {
        throw ArgumentError("--sample-times must lie in [0, " + format_double(p.t_final) + "]");
      }
      if (k > 0 && !(t > cfg.sample_times[k - 1])) {
        throw ArgumentError("--sample-times must be increasing");
      }
    }
  }
  cfg.out_path = require("out");
  check_writable(cfg.out_path);
  return cfg;
}

} // namespace

CliConfig parse_args(int argc, const char* const* argv, std::string* help) {
  CLI::App app{"Low-regularity integrators for quadratic and cubic NLS on the torus",
               "lowreg_nlse"};
  app.require_subcommand(1, 1);

  struct Sub {
    CLI::App* app;
    std::map<std::string, std::string> flags;
    std::string config;
  };
  const std::vector<std::pair<std::string, std::string>> names = {
      {"simulate", "run one trajectory to --t-final and measure it against the reference"},
      {"sweep-tau", "error at T/eps (T/eps^2 for cubic) over --tau-list"},
      {"sweep-eps", "error at T/eps (T/eps^2 for cubic) over --eps-list at fixed --tau"},
      {"error-vs-time", "error against the reference at --sample-times"},
      {"selftest", "oracle and symmetry checks on small grids"}};
  std::vector<Sub> subs(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    Sub& s = subs[k];
    s.app = app.add_subcommand(names[k].first, names[k].second);
    for (const auto& flag : kValueFlags) {
      s.app->add_option("--" + flag, s.flags[flag]);
    }
    s.app->add_option("--config", s.config, "JSON file with the same keys; flags override it");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help) {
      *help = app.help();
      return {};
    }
    throw ArgumentError(app.help());
  } catch (const CLI::ParseError& e) {
    throw ArgumentError(e.what());
  }

  for (std::size_t k = 0; k < subs.size(); ++k) {
    Sub& s = subs[k];
    if (!s.app->parsed()) continue;
    std::map<std::string, std::string> values;
    if (!s.config.empty()) values = read_config_file(s.config);
    for (const auto& flag : kValueFlags) {
      if (s.app->count("--" + flag) > 0) values[flag] = s.flags[flag];
    }
    return build_config(subcommand_from(names[k].first), std::move(values));
  }
  throw ArgumentError("exactly one subcommand is required");
}

namespace {

void print_fit(std::ostream& out, Scheme scheme, const std::optional<OrderFit>& fit) {
  if (!fit) {
    out << to_string(scheme) << ": no fit (some error is zero)\n";
    return;
  }
  out << to_string(scheme) << ": " << fit->abscissa << "-slope " << format_double(fit->slope)
      << " over " << fit->n_points << " points\n";
}

void write_snapshots(const CliConfig& cfg, const SimParams& p) {
  const fs::path dir(*cfg.snapshot_dir);
  fs::create_directories(dir);
  const SpectralField w0 = initial_data(p);
  const TrajectoryResult run = run_trajectory(p, w0);
  save_field(dir / "initial.txt", w0);
  save_field(dir / (std::string(to_string(p.scheme)) + "_final.txt"), run.final_state);
}

} // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand == Subcommand::Selftest) {
    return verify::report(out, verify::run_selftest()) ? 0 : 1;
  }
  SweepOptions options;
  options.ref_tau = cfg.ref_tau;
  options.check_reference = cfg.check_reference;
  options.jobs = cfg.jobs;
  ReferenceCache cache;
  options.cache = &cache;

  std::vector<SweepRecord> records;
  try {
    for (Scheme scheme : cfg.schemes) {
      SimParams p = cfg.params;
      p.scheme = scheme;
      switch (cfg.subcommand) {
        case Subcommand::Simulate:
          records.push_back(simulate(p, options));
          if (cfg.snapshot_dir) write_snapshots(cfg, p);
          break;
        case Subcommand::SweepTau: {
          SweepResult r = sweep_tau(p, cfg.tau_list, options);
          print_fit(out, scheme, r.fit);
          records.insert(records.end(), r.records.begin(), r.records.end());
          break;
        }
        case Subcommand::SweepEps: {
          SweepResult r = sweep_eps(p, cfg.eps_list, cfg.T, options);
          print_fit(out, scheme, r.fit);
          records.insert(records.end(), r.records.begin(), r.records.end());
          break;
        }
        case Subcommand::ErrorVsTime: {
          auto r = error_vs_time(p, cfg.sample_times, options);
          records.insert(records.end(), r.begin(), r.end());
          break;
        }
        case Subcommand::Selftest: break;
      }
    }
    write_sweep_csv_atomic(cfg.out_path, records);
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& r : records) {
    if (r.reliable) continue;
    err << "unreliable: " << to_string(r.params.scheme) << " eps=" << format_double(r.params.eps)
        << " tau=" << format_double(r.params.tau) << " t=" << format_double(r.params.t_final)
        << " error " << format_double(r.error) << " vs reference self-error "
        << format_double(r.ref_self_error) << "\n";
  }
  return exit_status(records);
}

int exit_status(std::span<const SweepRecord> records) noexcept {
  for (const auto& r : records) {
    if (!r.reliable) return 1;
  }
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    std::string help;
    cfg = parse_args(argc, argv, &help);
    if (!help.empty()) {
      out << help;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return run(cfg, out, err);
}

} // namespace lowreg::cli
