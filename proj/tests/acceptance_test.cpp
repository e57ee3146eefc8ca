// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Tolerances and frozen constants are pinned here and must not be loosened
// to make a run pass; a red criterion means the library is wrong.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "lieander/asymptotics.hpp"
#include "lieander/closedform.hpp"
#include "lieander/enumerate.hpp"
#include "lieander/verify.hpp"

using namespace lieander;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d (%s): %s — %s\n", index, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_table() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult suite = run_table_suite();
  bool anchors = true;
  anchors &= count_lieanders(3, 3, 10).count == 140;
  anchors &= count_lieanders(6, 1, 10).count == 2;
  // The (4,3) n = 50 anchor is one of the 539 suite cells; re-check explicitly.
  anchors &= count_lieanders(4, 3, 50).count == 1862765;
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu/539 cells exact, anchors %s, %.1fs",
                suite.checks.size() - suite.failures(),
                anchors ? "ok" : "WRONG", seconds_since(start));
  report(1, "table reproduction", suite.checks.size() == 539 && suite.all_pass() && anchors,
         detail);
}

void criterion_closedform() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult suite = run_closedform_suite(200);
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu checks (three shapes, n <= 200), %.1fs",
                suite.checks.size(), seconds_since(start));
  report(2, "closed forms = brute force", suite.checks.size() == 600 && suite.all_pass(),
         detail);
}

void criterion_gcd() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult suite = run_gcd_suite(100);
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu (shape, n) groups exhaustive, %.1fs",
                suite.checks.size(), seconds_since(start));
  report(3, "gcd criteria = connectivity", suite.all_pass(), detail);
}

void criterion_constants() {
  bool pass = true;
  std::string first_failure;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok && first_failure.empty()) first_failure = what;
    pass &= ok;
  };

  const PiRational six_over_pi2(BigRational(6), -2);
  expect(delta1(-1) == six_over_pi2, "delta1(-1)");
  expect(delta1(0) == six_over_pi2, "delta1(0)");
  expect(delta1(1) == PiRational(BigRational(40), -4), "delta1(1)");
  for (int k = -1; k <= 50; ++k)
    expect(delta1(k) == delta1_as_ratio(k), "ratio identity k=" + std::to_string(k));
  for (int k = 0; k <= 50; ++k) {
    expect(cyl1_diagram(k) == 2LL * (k + 4) * (k + 3), "cyl1 diagram k=" + std::to_string(k));
    expect(cyl1_binomial(k) == cyl1_diagram(k), "cyl1 binomial k=" + std::to_string(k));
  }
  expect(cyl1_diagram(-1) == 12, "cyl1 diagram k=-1");

  const double d2 = delta1(2).to_double();
  expect(std::abs(d2 - 45.0 / (2.0 * std::pow(std::numbers::pi, 4))) < 1e-6,
         "delta1(2) vs 45/(2 pi^4)");
  expect(std::round(d2 * 1e4) / 1e4 == 0.2310, "delta1(2) 4-decimal value");
  expect(delta1(2) == PiRational(BigRational(45, 2), -4), "delta1(2) exact fraction");

  report(4, "constant identities", pass,
         pass ? "delta1 = cyl1/Vol and both cyl1 formulas, k in [-1,50]"
              : "first failure: " + first_failure);
}

void criterion_error_bounds() {
  const auto start = std::chrono::steady_clock::now();
  // Frozen on first measurement (sups are 0.1741, 0.2767, 0.3511, attained
  // at x = 5, 3, 3 and stable under doubling x_max); the criterion allows
  // any single constant up to 5.
  const double frozen_c21 = 0.20;
  const double frozen_c31 = 0.30;
  const double frozen_c22 = 0.40;

  const TotientSieve sieve(10000);
  const ErrorTermReport r21 = error_term_check(2, 1, 10000, sieve);
  const ErrorTermReport r31 = error_term_check(3, 1, 10000, sieve);
  const ErrorTermReport r22 = error_term_check(2, 2, 10000, sieve);

  const bool pass = r21.sup_normalized <= frozen_c21 && r21.error_power == 1 &&
                    r31.sup_normalized <= frozen_c31 && r31.error_power == 2 &&
                    r22.sup_normalized <= frozen_c22 && r22.error_power == 2;
  char detail[192];
  std::snprintf(detail, sizeof detail,
                "x <= 1e4: sup/x·lnx = %.4f <= %.2f; sup/x^2·lnx = %.4f <= %.2f "
                "and %.4f <= %.2f; %.1fs",
                r21.sup_normalized, frozen_c21, r31.sup_normalized, frozen_c31,
                r22.sup_normalized, frozen_c22, seconds_since(start));
  report(5, "cumulative error bounds", pass, detail);
}

void criterion_convergence_from_below() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string values;
  for (const auto& [k_plus, k_minus] : {std::pair{4, 1}, std::pair{3, 2}}) {
    const CountTable counts = count_range(k_plus, k_minus, 50);
    const DensityReport at25 = make_density_report(
        k_plus, k_minus, 25, cumulative_sum(counts, k_plus, k_minus, 25));
    const DensityReport at50 = make_density_report(
        k_plus, k_minus, 50, cumulative_sum(counts, k_plus, k_minus, 50));
    pass &= at25.ratio < 1.0 && at50.ratio < 1.0 && at25.ratio < at50.ratio;
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%d,%d): %.4f < %.4f < 1; ", k_plus, k_minus,
                  at25.ratio, at50.ratio);
    values += buf;
  }
  char detail[224];
  std::snprintf(detail, sizeof detail, "%s%.1fs", values.c_str(), seconds_since(start));
  report(6, "convergence from below", pass, detail);
}

void criterion_large_k() {
  const double ratio = delta1_large_k_ratio(1000);
  char detail[96];
  std::snprintf(detail, sizeof detail, "ratio(1000) = %.6f in [0.99, 1.01]", ratio);
  report(7, "large-k Stirling form", ratio >= 0.99 && ratio <= 1.01, detail);
}

void criterion_determinism() {
  const auto start = std::chrono::steady_clock::now();
  const CountTable serial = count_range(3, 3, 30, 1);
  const CountTable parallel = count_range(3, 3, 30, 8);
  char detail[96];
  std::snprintf(detail, sizeof detail, "(3,3) n <= 30 with 1 vs 8 workers, %.1fs",
                seconds_since(start));
  report(8, "worker determinism", serial == parallel, detail);
}

}  // namespace

int main() {
  criterion_table();
  criterion_closedform();
  criterion_gcd();
  criterion_constants();
  criterion_error_bounds();
  criterion_convergence_from_below();
  criterion_large_k();
  criterion_determinism();

  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
