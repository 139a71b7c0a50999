#include "lowreg/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lowreg/errors.hpp"

namespace lowreg {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string& s, const char* column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ArgumentError(std::string("sweep csv: bad value '") + s + "' in column " + column);
  }
  return value;
}

} // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    const SimParams& p = r.params;
    os << to_string(p.equation) << ',' << to_string(p.scheme) << ',' << format_double(p.eps)
       << ',' << format_double(p.tau) << ',' << format_double(p.theta) << ',' << p.seed << ','
       << p.n_modes << ',' << format_double(p.t_final) << ',' << format_double(p.error_norm_r)
       << ',' << format_double(r.error) << ',' << format_double(r.ref_tau) << ','
       << format_double(r.wall_seconds) << ',' << r.fp_iter_max << ','
       << format_double(r.fp_iter_mean) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader) {
    throw ArgumentError("sweep csv: missing or unexpected header");
  }
  std::vector<SweepRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 14) {
      throw ArgumentError("sweep csv: expected 14 columns, got " + std::to_string(f.size()));
    }
    SweepRecord r;
    SimParams& p = r.params;
    p.equation = parse_equation(f[0]);
    p.scheme = parse_scheme(f[1]);
    p.eps = parse_number<double>(f[2], "eps");
    p.tau = parse_number<double>(f[3], "tau");
    p.theta = parse_number<double>(f[4], "theta");
    p.seed = parse_number<std::uint64_t>(f[5], "seed");
    p.n_modes = parse_number<std::size_t>(f[6], "n_modes");
    p.t_final = parse_number<double>(f[7], "t_final");
    p.error_norm_r = parse_number<double>(f[8], "error_norm_r");
    r.error = parse_number<double>(f[9], "error");
    r.ref_tau = parse_number<double>(f[10], "ref_tau");
    r.wall_seconds = parse_number<double>(f[11], "wall_seconds");
    r.fp_iter_max = parse_number<int>(f[12], "fp_iter_max");
    r.fp_iter_mean = parse_number<double>(f[13], "fp_iter_mean");
    out.push_back(std::move(r));
  }
  return out;
}

void write_sweep_csv_atomic(const std::filesystem::path& path,
                            std::span<const SweepRecord> records) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    write_sweep_csv(os, records);
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() +
                             ": " + ec.message());
  }
}

} // namespace lowreg
