#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "lowreg/csv.hpp"
#include "lowreg/errors.hpp"

using namespace lowreg;

namespace {

SweepRecord sample_record(double error) {
  SweepRecord r;
  r.params.equation = Equation::QuadraticModulusSquare;
  r.params.scheme = Scheme::SLI2;
  r.params.eps = 0.35;
  r.params.tau = 0.1 / 3.0;
  r.params.theta = 2.5;
  r.params.seed = 18446744073709551615ULL;
  r.params.n_modes = 64;
  r.params.t_final = 2.0 / 0.35;
  r.params.error_norm_r = 1.0;
  r.error = error;
  r.ref_tau = 1.25e-4;
  r.wall_seconds = 0.123456789;
  r.fp_iter_max = 7;
  r.fp_iter_mean = 5.333333333333333;
  return r;
}

} // namespace

TEST_CASE("format_double is shortest round trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(1.25e-4) == "0.000125");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-30, 30);
  for (int k = 0; k < 1000; ++k) {
    const double x = std::pow(10.0, u(rng)) * (k % 2 ? -1 : 1);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("sweep CSV round trip") {
  const std::vector<SweepRecord> recs{sample_record(0.0), sample_record(3.14e-9)};
  std::stringstream ss;
  write_sweep_csv(ss, recs);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  CHECK(header == kSweepCsvHeader);

  const auto back = read_sweep_csv(ss);
  REQUIRE(back.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& a = recs[k];
    const auto& b = back[k];
    CHECK(a.params.equation == b.params.equation);
    CHECK(a.params.scheme == b.params.scheme);
    CHECK(a.params.eps == b.params.eps);
    CHECK(a.params.tau == b.params.tau);
    CHECK(a.params.theta == b.params.theta);
    CHECK(a.params.seed == b.params.seed);
    CHECK(a.params.n_modes == b.params.n_modes);
    CHECK(a.params.t_final == b.params.t_final);
    CHECK(a.params.error_norm_r == b.params.error_norm_r);
    CHECK(a.error == b.error);
    CHECK(a.ref_tau == b.ref_tau);
    CHECK(a.wall_seconds == b.wall_seconds);
    CHECK(a.fp_iter_max == b.fp_iter_max);
    CHECK(a.fp_iter_mean == b.fp_iter_mean);
  }
}

TEST_CASE("sweep CSV rejects malformed input") {
  std::istringstream bad_header("equation,scheme\n");
  CHECK_THROWS_AS(read_sweep_csv(bad_header), ArgumentError);
  std::istringstream short_row(std::string(kSweepCsvHeader) + "\ncubic,nrli1,0.5\n");
  CHECK_THROWS_AS(read_sweep_csv(short_row), ArgumentError);
  std::istringstream bad_number(std::string(kSweepCsvHeader) +
                                "\ncubic,nrli1,x,0.1,5,1,128,8,1,0.1,1e-4,1,0,0\n");
  CHECK_THROWS_AS(read_sweep_csv(bad_number), ArgumentError);
  std::istringstream bad_scheme(std::string(kSweepCsvHeader) +
                                "\ncubic,euler,0.5,0.1,5,1,128,8,1,0.1,1e-4,1,0,0\n");
  CHECK_THROWS_AS(read_sweep_csv(bad_scheme), ArgumentError);
}

TEST_CASE("atomic CSV write") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lowreg_csv_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path out = dir / "run.csv";
  const std::vector<SweepRecord> recs{sample_record(1e-3)};
  write_sweep_csv_atomic(out, recs);
  write_sweep_csv_atomic(out, recs);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::ifstream in(out);
  CHECK(read_sweep_csv(in).size() == 1);
  CHECK_THROWS(write_sweep_csv_atomic(dir / "missing" / "x.csv", recs));
  fs::remove_all(dir);
}
