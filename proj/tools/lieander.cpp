// Command-line front-end for the lieander library: connectivity checks,
// exact count tables, density reports, residue-class data, and the
// cross-verification suites. All data goes to stdout as CSV (the `check`
// command prints a single verdict line); diagnostics go to stderr.
// Exit codes: 0 success, 1 semantic negative (not a lieander, failed
// verification, runtime failure), 2 usage or parse error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieander/asymptotics.hpp"
#include "lieander/closedform.hpp"
#include "lieander/core.hpp"
#include "lieander/enumerate.hpp"
#include "lieander/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

struct CacheFile {
  std::optional<std::string> path;
  lieander::CountTable table;

  void load() {
    if (path && std::filesystem::exists(*path))
      table = lieander::CountTable::load_csv(*path);
  }
  void append(const std::vector<lieander::CountRecord>& fresh) {
    if (path && !fresh.empty()) lieander::CountTable::append_csv(*path, fresh);
  }
};

int cmd_check(const std::string& pair_text) {
  lieander::CompositionPair pair = lieander::parse_pair(pair_text);
  const bool connected = lieander::is_lieander(pair);
  const int orbits = lieander::orbit_count(pair);
  std::string cycles;
  for (int len : lieander::product_cycle_type(pair)) {
    if (!cycles.empty()) cycles += ',';
    cycles += std::to_string(len);
  }
  std::cout << (connected ? "lieander" : "not-lieander") << " orbits=" << orbits
            << " cycles=" << cycles << "\n";
  return connected ? kExitSuccess : kExitNegative;
}

int cmd_count(int k_plus, int k_minus, int n_max, CacheFile& cache, int workers) {
  cache.load();
  std::vector<lieander::CountRecord> fresh;
  const lieander::CountTable counts =
      lieander::count_range(k_plus, k_minus, n_max, workers, &cache.table, &fresh);
  cache.append(fresh);

  std::cout << "kplus,kminus,n,count\n";
  for (int n = 1; n <= n_max; ++n)
    std::cout << k_plus << ',' << k_minus << ',' << n << ','
              << *counts.lookup(k_plus, k_minus, n) << "\n";
  return kExitSuccess;
}

std::vector<std::pair<int, int>> table_shapes(int ksum) {
  std::vector<std::pair<int, int>> shapes;
  for (int s = 3; s <= ksum; ++s)
    for (int k_plus = s - 1; 2 * k_plus >= s; --k_plus)
      shapes.emplace_back(k_plus, s - k_plus);
  return shapes;
}

int cmd_table(int ksum, int n_max, CacheFile& cache, int workers) {
  cache.load();
  const auto shapes = table_shapes(ksum);

  std::vector<lieander::CountTable> columns;
  std::vector<lieander::CountRecord> fresh;
  columns.reserve(shapes.size());
  for (const auto& [k_plus, k_minus] : shapes)
    columns.push_back(
        lieander::count_range(k_plus, k_minus, n_max, workers, &cache.table, &fresh));
  cache.append(fresh);

  std::cout << "n";
  for (const auto& [k_plus, k_minus] : shapes)
    std::cout << ",L" << k_plus << '_' << k_minus;
  std::cout << "\n";
  for (int n = 2; n <= n_max; ++n) {
    std::cout << n;
    for (std::size_t c = 0; c < shapes.size(); ++c)
      std::cout << ',' << *columns[c].lookup(shapes[c].first, shapes[c].second, n);
    std::cout << "\n";
  }
  return kExitSuccess;
}

int cmd_density(int k_plus, int k_minus, int x_max, int step, CacheFile& cache,
                int workers) {
  cache.load();
  std::vector<lieander::CountRecord> fresh;
  const lieander::CountTable counts =
      lieander::count_range(k_plus, k_minus, x_max, workers, &cache.table, &fresh);
  cache.append(fresh);

  std::cout << "x,measured,predicted,ratio\n";
  for (int x = step; x <= x_max; x += step) {
    const std::int64_t cumulative = lieander::cumulative_sum(counts, k_plus, k_minus, x);
    const lieander::DensityReport report =
        lieander::make_density_report(k_plus, k_minus, x, cumulative);
    std::cout << x << ',' << format_double(report.measured) << ','
              << format_double(report.predicted) << ',' << format_double(report.ratio)
              << "\n";
  }
  return kExitSuccess;
}

std::string residue_class(int n) {
  switch (n % 6) {
    case 0: return "0";
    case 1: case 5: return "1,5";
    case 2: case 4: return "2,4";
    default: return "3";
  }
}

int cmd_residues(int k_plus, int k_minus, int n_max, CacheFile& cache, int workers) {
  cache.load();
  std::vector<lieander::CountRecord> fresh;
  const lieander::CountTable counts =
      lieander::count_range(k_plus, k_minus, n_max, workers, &cache.table, &fresh);
  cache.append(fresh);

  const int power = k_plus + k_minus - 2;
  std::cout << "n,normalized,class\n";
  for (int n = 1; n <= n_max; ++n) {
    const double normalized =
        static_cast<double>(*counts.lookup(k_plus, k_minus, n)) /
        std::pow(static_cast<double>(n), power);
    std::cout << n << ',' << format_double(normalized) << ','
              << csv_quote(residue_class(n)) << "\n";
  }
  return kExitSuccess;
}

int cmd_verify(const std::string& suite_name, int workers) {
  std::vector<lieander::SuiteResult> results;
  if (suite_name == "gcd")
    results.push_back(lieander::run_gcd_suite());
  else if (suite_name == "closedform")
    results.push_back(lieander::run_closedform_suite(200, workers));
  else if (suite_name == "cyl1")
    results.push_back(lieander::run_cyl1_suite());
  else if (suite_name == "delta1")
    results.push_back(lieander::run_delta1_suite());
  else if (suite_name == "table")
    results.push_back(lieander::run_table_suite(workers));
  else if (suite_name == "all")
    results = lieander::run_all_suites(workers);
  else {
    std::cerr << "unknown suite '" << suite_name
              << "' (expected gcd, closedform, cyl1, delta1, table, or all)\n";
    return kExitUsage;
  }

  std::cout << "suite,check,expected,actual,status\n";
  int failures = 0;
  long total = 0;
  for (const lieander::SuiteResult& suite : results) {
    for (const lieander::Check& check : suite.checks) {
      std::cout << suite.suite << ',' << csv_quote(check.name) << ','
                << csv_quote(check.expected) << ',' << csv_quote(check.actual) << ','
                << (check.pass ? "ok" : "FAIL") << "\n";
      ++total;
    }
    failures += suite.failures();
    std::cerr << "suite " << suite.suite << ": " << suite.checks.size() << " checks, "
              << suite.failures() << " failures\n";
  }
  if (failures > 0) {
    std::cerr << failures << " of " << total << " checks failed\n";
    return kExitNegative;
  }
  return kExitSuccess;
}

int cmd_delta1(int k, bool exact) {
  if (exact) {
    const lieander::PiRational value = lieander::delta1(k);
    std::cout << "k,coeff,pi_power\n";
    std::cout << k << ',' << csv_quote(value.coeff().str()) << ',' << value.pi_power()
              << "\n";
  } else {
    std::cout << "k,delta1\n";
    std::cout << k << ',' << format_double(lieander::delta1(k).to_double()) << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and asymptotics of lieanders"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string pair_text;
  CLI::App* check = app.add_subcommand("check", "Test whether top/bottom is a lieander");
  check->add_option("pair", pair_text, "Pair as 'top/bottom', e.g. 4,2,2/2,1,5")
      ->required();

  int k_plus = 0, k_minus = 0, n_max = 0, x_max = 0, step = 1, workers = 0;
  int ksum = 7, table_nmax = 50, delta_k = 0;
  std::optional<std::string> cache_path;
  bool exact = false;

  CLI::App* count = app.add_subcommand("count", "Exact counts for one shape, n = 1..N");
  count->add_option("--kplus", k_plus, "Top length")->required()->check(CLI::PositiveNumber);
  count->add_option("--kminus", k_minus, "Bottom length")->required()->check(CLI::PositiveNumber);
  count->add_option("--nmax", n_max, "Largest sum")->required()->check(CLI::PositiveNumber);
  count->add_option("--cache", cache_path, "CSV count cache to reuse and extend");
  count->add_option("--workers", workers, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* table = app.add_subcommand("table", "Count table, one column per shape");
  table->add_option("--ksum", ksum, "Largest k_plus + k_minus")
      ->check(CLI::Range(3, 1 << 20));
  table->add_option("--nmax", table_nmax, "Largest sum")->check(CLI::Range(2, 1 << 20));
  table->add_option("--cache", cache_path, "CSV count cache to reuse and extend");
  table->add_option("--workers", workers, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* density = app.add_subcommand(
      "density", "Cumulative density vs. the predicted limit coefficient");
  density->add_option("--kplus", k_plus, "Top length")->required()->check(CLI::PositiveNumber);
  density->add_option("--kminus", k_minus, "Bottom length")->required()->check(CLI::PositiveNumber);
  density->add_option("--xmax", x_max, "Largest cutoff")->required()->check(CLI::PositiveNumber);
  density->add_option("--step", step, "Cutoff stride")->check(CLI::PositiveNumber);
  density->add_option("--cache", cache_path, "CSV count cache to reuse and extend");
  density->add_option("--workers", workers, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* residues = app.add_subcommand(
      "residues", "Per-n normalized counts with residue classes mod 6");
  residues->add_option("--kplus", k_plus, "Top length")->required()->check(CLI::PositiveNumber);
  residues->add_option("--kminus", k_minus, "Bottom length")->required()->check(CLI::PositiveNumber);
  residues->add_option("--nmax", n_max, "Largest sum")->required()->check(CLI::PositiveNumber);
  residues->add_option("--cache", cache_path, "CSV count cache to reuse and extend");
  residues->add_option("--workers", workers, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  std::string suite_name;
  CLI::App* verify = app.add_subcommand("verify", "Run a cross-verification suite");
  verify->add_option("suite", suite_name, "gcd, closedform, cyl1, delta1, table, or all")
      ->required();
  verify->add_option("--workers", workers, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* delta = app.add_subcommand("delta1", "The density constant delta1(k)");
  delta->add_option("--k", delta_k, "Argument k >= -1")->required()
      ->check(CLI::Range(-1, 1 << 20));
  delta->add_flag("--exact", exact, "Print the exact rational and pi power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    CacheFile cache{cache_path, {}};
    if (check->parsed()) return cmd_check(pair_text);
    if (count->parsed()) return cmd_count(k_plus, k_minus, n_max, cache, workers);
    if (table->parsed()) return cmd_table(ksum, table_nmax, cache, workers);
    if (density->parsed()) {
      if (k_plus == 1 && k_minus == 1) {
        std::cerr << "density is undefined for two single-block sides\n";
        return kExitUsage;
      }
      if (step > x_max) {
        std::cerr << "--step must not exceed --xmax\n";
        return kExitUsage;
      }
      return cmd_density(k_plus, k_minus, x_max, step, cache, workers);
    }
    if (residues->parsed()) return cmd_residues(k_plus, k_minus, n_max, cache, workers);
    if (verify->parsed()) return cmd_verify(suite_name, workers);
    if (delta->parsed()) return cmd_delta1(delta_k, exact);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}
