#pragma once

#include <string>
#include <vector>

namespace lieander {

/// One cross-checked equality, with both sides rendered for reporting.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Arithmetic criterion vs. orbit connectivity, every pair of the shapes
/// (2,1), (3,1), (2,2) with sum up to n_max; one check per (shape, n).
SuiteResult run_gcd_suite(int n_max = 100);

/// Closed formulas vs. exhaustive counting, shapes (2,1), (3,1), (2,2),
/// one check per (shape, n) for n up to n_max.
SuiteResult run_closedform_suite(int n_max = 200, int workers = 0);

/// Diagram formula vs. binomial sum vs. 2(k+4)(k+3), k in [-1, k_max].
SuiteResult run_cyl1_suite(int k_max = 50);

/// Exact constant identities: the stated small values, the ratio identity
/// delta1 = cyl1/Vol for k in [-1, k_max], the predicted cumulative
/// coefficients for the five smallest shapes, and the Stirling-form ratio.
SuiteResult run_delta1_suite(int k_max = 50);

/// Exhaustive counts vs. the embedded fixture: every shape with
/// k_plus + k_minus <= 7, n = 2..50 (539 cells).
SuiteResult run_table_suite(int workers = 0);

/// All of the above, in the order gcd, closedform, cyl1, delta1, table.
std::vector<SuiteResult> run_all_suites(int workers = 0);

}  // namespace lieander
