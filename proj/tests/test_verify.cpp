#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieander/verify.hpp"

using namespace lieander;

TEST_CASE("suite results count failures") {
  SuiteResult result{"demo", {}};
  CHECK(result.all_pass());
  result.checks.push_back({"a", "1", "1", true});
  result.checks.push_back({"b", "1", "2", false});
  result.checks.push_back({"c", "3", "3", true});
  CHECK(result.failures() == 1);
  CHECK_FALSE(result.all_pass());
}

TEST_CASE("cyl1 suite covers k = -1..50 and passes") {
  const SuiteResult suite = run_cyl1_suite();
  CHECK(suite.suite == "cyl1");
  CHECK(suite.checks.size() == 52);
  CHECK(suite.all_pass());
  CHECK(suite.checks.front().name == "cyl1 k=-1");
  CHECK(suite.checks.back().name == "cyl1 k=50");
}

TEST_CASE("delta1 suite passes") {
  const SuiteResult suite = run_delta1_suite();
  CHECK(suite.all_pass());
  // Named values, the per-k ratio identity, five coefficients, one Stirling
  // ratio: 7 + 52 + 5 + 1 checks.
  CHECK(suite.checks.size() == 65);
}

TEST_CASE("gcd suite passes at reduced depth") {
  const SuiteResult suite = run_gcd_suite(25);
  CHECK(suite.all_pass());
  // Shapes (2,1), (3,1), (2,2) start at n = 2, 3, 2.
  CHECK(suite.checks.size() == 24 + 23 + 24);
  for (const Check& check : suite.checks) CHECK(check.expected == check.actual);
}

TEST_CASE("closedform suite passes at reduced depth") {
  const SuiteResult suite = run_closedform_suite(40, 1);
  CHECK(suite.all_pass());
  CHECK(suite.checks.size() == 3 * 40);
}
