#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lowreg/harness.hpp"

namespace lowreg::cli {

enum class Subcommand { Simulate, SweepTau, SweepEps, ErrorVsTime, Selftest };

struct CliConfig {
  Subcommand subcommand = Subcommand::Selftest;
  SimParams params;
  /// One or more schemes; sweeps run once per scheme and concatenate.
  std::vector<Scheme> schemes;
  /// Horizon constant of the long-time subcommands (T/eps or T/eps^2).
  double T = 1.0;
  std::vector<double> tau_list;
  std::vector<double> eps_list;
  std::vector<double> sample_times;
  double ref_tau = 0.0;
  bool check_reference = true;
  unsigned jobs = 1;
  std::string out_path;
  /// simulate only: directory receiving the initial and final fields.
  std::optional<std::string> snapshot_dir;
};

/// Parses argv (argv[0] is the program name). Throws ArgumentError naming
/// the offending flag. `--help` is reported as ArgumentError with the usage
/// text as message when `help` is null, otherwise written there.
CliConfig parse_args(int argc, const char* const* argv, std::string* help = nullptr);

/// Executes the subcommand. Returns 0 when every record is reliable (or
/// every selftest check passes), 1 otherwise, 2 on solver or I/O failure.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// 0 when every record is reliable, 1 otherwise.
int exit_status(std::span<const SweepRecord> records) noexcept;

/// parse_args + run with diagnostics on `err`; usage errors exit 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lowreg::cli
