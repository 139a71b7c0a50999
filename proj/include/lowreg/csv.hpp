#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lowreg/harness.hpp"

namespace lowreg {

/// Column order of every sweep CSV.
inline constexpr const char* kSweepCsvHeader =
    "equation,scheme,eps,tau,theta,seed,n_modes,t_final,error_norm_r,error,ref_tau,"
    "wall_seconds,fp_iter_max,fp_iter_mean";

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records);

/// Parses a sweep CSV. Fields outside the schema (reliability, solver
/// settings) are left at their defaults. Throws ArgumentError on a bad
/// header, wrong column count or unparsable field.
std::vector<SweepRecord> read_sweep_csv(std::istream& is);

/// Writes to `path` via a temporary file in the same directory and a rename.
void write_sweep_csv_atomic(const std::filesystem::path& path,
                            std::span<const SweepRecord> records);

} // namespace lowreg
