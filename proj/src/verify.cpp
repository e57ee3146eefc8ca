#include "lieander/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

#include "lieander/asymptotics.hpp"
#include "lieander/closedform.hpp"
#include "lieander/core.hpp"
#include "lieander/enumerate.hpp"
#include "lieander/reference_table.hpp"

namespace lieander {

int SuiteResult::failures() const {
  int count = 0;
  for (const Check& c : checks)
    if (!c.pass) ++count;
  return count;
}

namespace {

void add_check(SuiteResult& suite, std::string name, std::string expected,
               std::string actual) {
  const bool pass = expected == actual;
  suite.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

std::string shape_tag(int k_plus, int k_minus) {
  return "(" + std::to_string(k_plus) + "," + std::to_string(k_minus) + ")";
}

}  // namespace

SuiteResult run_gcd_suite(int n_max) {
  SuiteResult suite{"gcd", {}};
  constexpr std::pair<int, int> shapes[] = {{2, 1}, {3, 1}, {2, 2}};
  for (const auto& [k_plus, k_minus] : shapes) {
    for (int n = std::max(k_plus, k_minus); n <= n_max; ++n) {
      long mismatches = 0;
      long pairs = 0;
      for (const Composition& top : compositions_of(n, k_plus)) {
        for (const Composition& bottom : compositions_of(n, k_minus)) {
          const CompositionPair pair(top, bottom);
          ++pairs;
          if (is_lieander_gcd(pair) != is_lieander(pair)) ++mismatches;
        }
      }
      add_check(suite, "gcd" + shape_tag(k_plus, k_minus) + " n=" + std::to_string(n),
                "0 mismatches in " + std::to_string(pairs) + " pairs",
                std::to_string(mismatches) + " mismatches in " + std::to_string(pairs) +
                    " pairs");
    }
  }
  return suite;
}

SuiteResult run_closedform_suite(int n_max, int workers) {
  SuiteResult suite{"closedform", {}};
  const TotientSieve sieve(n_max);
  constexpr std::pair<int, int> shapes[] = {{2, 1}, {3, 1}, {2, 2}};
  for (const auto& [k_plus, k_minus] : shapes) {
    for (int n = 1; n <= n_max; ++n) {
      const std::int64_t formula = closed_count(k_plus, k_minus, n, sieve);
      const std::int64_t brute = count_lieanders(k_plus, k_minus, n, workers).count;
      add_check(suite,
                "closedform" + shape_tag(k_plus, k_minus) + " n=" + std::to_string(n),
                std::to_string(formula), std::to_string(brute));
    }
  }
  return suite;
}

SuiteResult run_cyl1_suite(int k_max) {
  SuiteResult suite{"cyl1", {}};
  for (int k = -1; k <= k_max; ++k) {
    const std::string product = std::to_string(2LL * (k + 4) * (k + 3));
    add_check(suite, "cyl1 k=" + std::to_string(k),
              "diagram=" + product + " binomial=" + product,
              "diagram=" + std::to_string(cyl1_diagram(k)) +
                  " binomial=" + std::to_string(cyl1_binomial(k)));
  }
  return suite;
}

SuiteResult run_delta1_suite(int k_max) {
  SuiteResult suite{"delta1", {}};

  const PiRational six_over_pi2(BigRational(6), -2);
  add_check(suite, "delta1(-1)", six_over_pi2.to_string(), delta1(-1).to_string());
  add_check(suite, "delta1(0)", six_over_pi2.to_string(), delta1(0).to_string());
  add_check(suite, "delta1(-1) == delta1(0)", delta1(-1).to_string(),
            delta1(0).to_string());
  add_check(suite, "delta1(1)", PiRational(BigRational(40), -4).to_string(),
            delta1(1).to_string());

  // The printed decimal next to delta1(2) is 0.2310; the formula gives
  // 45/(2 pi^4) = 0.230985 (not the sometimes-quoted 42/(2 pi^4) = 0.215586).
  const double d2 = delta1(2).to_double();
  const double d2_reference = 45.0 / (2.0 * std::pow(std::numbers::pi, 4));
  add_check(suite, "delta1(2) exact", PiRational(BigRational(45, 2), -4).to_string(),
            delta1(2).to_string());
  add_check(suite, "delta1(2) within 1e-6 of 45/(2 pi^4)", "|error| < 1e-6",
            std::abs(d2 - d2_reference) < 1e-6 ? "|error| < 1e-6" : "off");
  char rounded[16];
  std::snprintf(rounded, sizeof rounded, "%.4f", d2);
  add_check(suite, "delta1(2) rounds to 0.2310", "0.2310", rounded);

  for (int k = -1; k <= k_max; ++k)
    add_check(suite, "delta1 == cyl1/Vol k=" + std::to_string(k),
              delta1(k).to_string(), delta1_as_ratio(k).to_string());

  const struct {
    int k_plus, k_minus;
    PiRational coefficient;
  } predicted[] = {
      {2, 1, PiRational(BigRational(3), -2)},
      {3, 1, PiRational(BigRational(1), -2)},
      {2, 2, PiRational(BigRational(2), -2)},
      {4, 1, PiRational(BigRational(5, 3), -4)},
      {3, 2, PiRational(BigRational(5), -4)},
  };
  for (const auto& p : predicted)
    add_check(suite, "predicted coefficient " + shape_tag(p.k_plus, p.k_minus),
              p.coefficient.to_string(),
              predicted_coefficient(p.k_plus, p.k_minus).to_string());

  const double stirling = delta1_large_k_ratio(1000);
  add_check(suite, "delta1_large_k_ratio(1000) in [0.99, 1.01]", "in range",
            stirling >= 0.99 && stirling <= 1.01 ? "in range" : std::to_string(stirling));

  return suite;
}

SuiteResult run_table_suite(int workers) {
  SuiteResult suite{"table", {}};
  const auto& table = reference_counts();
  for (std::size_t col = 0; col < kReferenceShapes.size(); ++col) {
    const auto [k_plus, k_minus] = kReferenceShapes[col];
    const CountTable counted = count_range(k_plus, k_minus, kReferenceNMax, workers);
    for (int n = kReferenceNMin; n <= kReferenceNMax; ++n)
      add_check(suite, "table" + shape_tag(k_plus, k_minus) + " n=" + std::to_string(n),
                std::to_string(table[n - kReferenceNMin][col]),
                std::to_string(*counted.lookup(k_plus, k_minus, n)));
  }
  return suite;
}

std::vector<SuiteResult> run_all_suites(int workers) {
  return {run_gcd_suite(), run_closedform_suite(200, workers), run_cyl1_suite(),
          run_delta1_suite(), run_table_suite(workers)};
}

}  // namespace lieander
