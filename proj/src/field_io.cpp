#include "lowreg/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lowreg/errors.hpp"

namespace lowreg {

void write_field(std::ostream& os, const SpectralField& field) {
  const TorusGrid& g = field.grid();
  char buf[96];
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const cplx c = field.coeff(l);
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", l, c.real(), c.imag());
    os << buf;
  }
}

SpectralField read_field(std::istream& is) {
  std::vector<cplx> coeffs;
  std::vector<int> modes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    int l = 0;
    double re = 0.0, im = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf%c", &l, &re, &im, &tail) != 3) {
      throw ArgumentError("read_field: malformed line " + std::to_string(lineno) +
                          ": '" + line + "'");
    }
    modes.push_back(l);
    coeffs.emplace_back(re, im);
  }
  if (coeffs.size() < 4 || coeffs.size() % 2 != 0) {
    throw ArgumentError("read_field: need an even number (>= 4) of modes, got " +
                        std::to_string(coeffs.size()));
  }
  const TorusGrid grid(coeffs.size());
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (modes[k] != grid.mode(k)) {
      throw ArgumentError("read_field: expected mode " + std::to_string(grid.mode(k)) +
                          " at line " + std::to_string(k + 1) + ", got " +
                          std::to_string(modes[k]));
    }
  }
  return SpectralField(grid, std::move(coeffs));
}

void save_field(const std::filesystem::path& path, const SpectralField& field) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_field: cannot open " + path.string());
  write_field(os, field);
  if (!os) throw std::runtime_error("save_field: write failed for " + path.string());
}

SpectralField load_field(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_field: cannot open " + path.string());
  return read_field(is);
}

} // namespace lowreg
