#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the CLI with stderr dropped; stdout and the exit code come back.
RunResult run_cli(const std::string& args) {
  const std::string command = std::string(LIEANDER_CLI_PATH) + " " + args +
                              " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::mt19937_64 rng(std::random_device{}());
    path = fs::temp_directory_path() / ("lieander_cli_" + std::to_string(rng()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("check prints the verdict with orbits and cycle type") {
  const RunResult good = run_cli("check 4,2,2/2,1,5");
  CHECK(good.exit_code == 0);
  CHECK(good.out == "lieander orbits=1 cycles=8,8\n");

  const RunResult bad = run_cli("check 2,2/4");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out == "not-lieander orbits=2 cycles=2,2,2,2\n");

  const RunResult tiny = run_cli("check 1/1");
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.out == "lieander orbits=1 cycles=1,1\n");
}

TEST_CASE("check rejects malformed pairs with exit 2") {
  CHECK(run_cli("check 1,2/4").exit_code == 2);   // unequal sums
  CHECK(run_cli("check 1,2").exit_code == 2);     // no slash
  CHECK(run_cli("check 0,2/2").exit_code == 2);   // nonpositive part
  CHECK(run_cli("check").exit_code == 2);         // missing argument
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);              // subcommand required
}

TEST_CASE("count emits the cache CSV schema") {
  const RunResult r = run_cli("count --kplus 2 --kminus 1 --nmax 5");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "kplus,kminus,n,count");
  CHECK(lines[1] == "2,1,1,0");
  CHECK(lines[2] == "2,1,2,1");
  CHECK(lines[3] == "2,1,3,2");
  CHECK(lines[4] == "2,1,4,2");
  CHECK(lines[5] == "2,1,5,4");

  CHECK(run_cli("count --kplus 0 --kminus 1 --nmax 5").exit_code == 2);
  CHECK(run_cli("count --kplus 2 --kminus 1").exit_code == 2);
}

TEST_CASE("count caches results and reuses them") {
  const TempDir dir;
  const std::string cache = (dir.path / "counts.csv").string();

  const RunResult first = run_cli("count --kplus 2 --kminus 2 --nmax 8 --cache " + cache);
  CHECK(first.exit_code == 0);
  REQUIRE(fs::exists(cache));
  const auto written = fs::file_size(cache);

  const RunResult second = run_cli("count --kplus 2 --kminus 2 --nmax 8 --cache " + cache);
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
  CHECK(fs::file_size(cache) == written);  // fully cached: nothing appended

  // A poisoned cache is rejected (exit 1), not silently used.
  std::ofstream(cache, std::ios::binary) << "kplus,kminus,n,count\n2,2,4,4\n2,2,4,5\n";
  CHECK(run_cli("count --kplus 2 --kminus 2 --nmax 8 --cache " + cache).exit_code == 1);
}

TEST_CASE("table reproduces fixture columns at small sizes") {
  const RunResult r = run_cli("table --ksum 4 --nmax 6");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "n,L2_1,L3_1,L2_2");
  CHECK(lines[1] == "2,1,0,0");
  CHECK(lines[2] == "3,2,0,2");
  CHECK(lines[3] == "4,2,2,4");
  CHECK(lines[4] == "5,4,2,12");
  CHECK(lines[5] == "6,2,8,8");

  const RunResult single = run_cli("table --ksum 3 --nmax 5");
  CHECK(single.exit_code == 0);
  const auto single_lines = lines_of(single.out);
  REQUIRE(single_lines.size() == 5);
  CHECK(single_lines[0] == "n,L2_1");
  CHECK(single_lines[1] == "2,1");
  CHECK(single_lines[4] == "5,4");

  CHECK(run_cli("table --ksum 2").exit_code == 2);
  CHECK(run_cli("table --nmax 1").exit_code == 2);
}

TEST_CASE("table output is byte-stable across runs and worker counts") {
  const RunResult a = run_cli("table --ksum 5 --nmax 10 --workers 1");
  const RunResult b = run_cli("table --ksum 5 --nmax 10 --workers 4");
  const RunResult c = run_cli("table --ksum 5 --nmax 10 --workers 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}

TEST_CASE("density reports measured, predicted, and ratio columns") {
  const RunResult r = run_cli("density --kplus 2 --kminus 1 --xmax 10 --step 5");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "x,measured,predicted,ratio");
  // S(5) = 9, S(10) = 31; predicted coefficient 3/pi^2.
  CHECK(lines[1] == "5,0.36,0.303963550927,1.18435252813");
  CHECK(lines[2] == "10,0.31,0.303963550927,1.01985912145");

  CHECK(run_cli("density --kplus 1 --kminus 1 --xmax 10").exit_code == 2);
  CHECK(run_cli("density --kplus 2 --kminus 1 --xmax 4 --step 9").exit_code == 2);
}

TEST_CASE("residues labels the four classes mod 6") {
  const RunResult r = run_cli("residues --kplus 4 --kminus 1 --nmax 12");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "n,normalized,class");
  CHECK(lines[5] == "5,0,\"1,5\"");
  CHECK(lines[6] == "6,0.00925925925926,0");        // 2/216
  CHECK(lines[10] == "10,0.034,\"2,4\"");           // 34/1000
  CHECK(lines[9] == "9,0.0082304526749,3");         // 6/729
}

TEST_CASE("verify emits per-check CSV and distinguishes suites") {
  const RunResult cyl = run_cli("verify cyl1");
  CHECK(cyl.exit_code == 0);
  const auto lines = lines_of(cyl.out);
  REQUIRE(lines.size() == 53);  // header + 52 checks
  CHECK(lines[0] == "suite,check,expected,actual,status");
  CHECK(lines[1] == "cyl1,cyl1 k=-1,diagram=12 binomial=12,diagram=12 binomial=12,ok");
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].substr(lines[i].size() - 3) == ",ok");

  CHECK(run_cli("verify delta1").exit_code == 0);
  CHECK(run_cli("verify nonsense").exit_code == 2);
}

TEST_CASE("delta1 prints float or exact forms") {
  const RunResult f = run_cli("delta1 --k 2");
  CHECK(f.exit_code == 0);
  CHECK(f.out == "k,delta1\n2,0.23098460073\n");

  const RunResult e = run_cli("delta1 --k 2 --exact");
  CHECK(e.exit_code == 0);
  CHECK(e.out == "k,coeff,pi_power\n2,45/2,-4\n");

  const RunResult low = run_cli("delta1 --k=-1 --exact");
  CHECK(low.exit_code == 0);
  CHECK(low.out == "k,coeff,pi_power\n-1,6,-2\n");

  CHECK(run_cli("delta1 --k=-2").exit_code == 2);
}
