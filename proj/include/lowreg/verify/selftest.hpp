#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowreg::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Measured quantity (max discrepancy) and the bound it was held to.
  double measured = 0.0;
  double bound = 0.0;
};

/// Oracle-equivalence, correction-identity, symmetry and zero-mode suites
/// on grids with N <= 16. Cheap enough for the CLI.
std::vector<CheckResult> run_selftest();

/// Prints one "PASS|FAIL name measured <= bound" line per check; true if
/// all passed.
bool report(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace lowreg::verify
