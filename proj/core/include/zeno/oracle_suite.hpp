#pragma once

// Cross-checks of the numerical engine against the two-site closed forms and
// the ideal-measurement identity. Backs the `analytic-check` command.

#include <ostream>
#include <string>
#include <vector>

namespace zeno {

struct OracleCheck {
  std::string name;
  double observed = 0.0;   ///< max error, or the checked quantity for ratio-type checks
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct OracleOptions {
  /// Perturb one entry of the composite propagator by 1e-6 so the
  /// propagation checks must fail. Used to prove the harness can go red.
  bool inject_fault = false;
};

std::vector<OracleCheck> run_oracle_suite(const OracleOptions& opts = {});

/// One line per check; returns true when every check passed.
bool print_oracle_report(const std::vector<OracleCheck>& checks, std::ostream& out);

}  // namespace zeno
