#pragma once

#include <filesystem>
#include <iosfwd>

#include "lowreg/field.hpp"

namespace lowreg {

// Text format: one line "l,re,im" per mode in ascending l, 17 significant
// digits, so a write/read cycle is exact.

void write_field(std::ostream& os, const SpectralField& field);
/// Throws ArgumentError on malformed lines, gaps in l, or an odd line count.
SpectralField read_field(std::istream& is);

void save_field(const std::filesystem::path& path, const SpectralField& field);
SpectralField load_field(const std::filesystem::path& path);

} // namespace lowreg
