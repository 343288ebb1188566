// End-to-end checks of the command-line tool: exit codes, config handling,
// header echo, and byte determinism.  The binary path arrives as the last
// positional argument (wired up by the test harness).
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      "\"" + cli_path + "\" " + args + " > cli_stdout.txt 2> cli_stderr.txt";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  r.out = slurp("cli_stdout.txt");
  r.err = slurp("cli_stderr.txt");
  return r;
}

int count_lines(const std::string& s, const std::string& needle) {
  int n = 0;
  std::istringstream ss(s);
  for (std::string line; std::getline(ss, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("verify --fast passes and reports every criterion") {
  const RunResult r = run_cli("verify --fast");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out, "[PASS]") == 12);
  CHECK(count_lines(r.out, "[FAIL]") == 0);
  for (int id = 1; id <= 12; ++id) {
    char tag[8];
    std::snprintf(tag, sizeof tag, "] %2d ", id);
    CHECK(r.out.find(tag) != std::string::npos);
  }
  CHECK(r.out.find("12 criteria, 0 failed") != std::string::npos);
}

TEST_CASE("csv output echoes the command and every parameter") {
  const RunResult r = run_cli("discord-curve --r-max 3.5 --points 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# command: discord-curve") != std::string::npos);
  CHECK(r.out.find("r-max=3.5") != std::string::npos);
  CHECK(r.out.find("points=7") != std::string::npos);
  CHECK(r.out.find("# columns:") != std::string::npos);
  // 4 header lines + 7 data rows
  int rows = 0;
  std::istringstream ss(r.out);
  for (std::string line; std::getline(ss, line);)
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 7);
}

TEST_CASE("identical config gives byte-identical files") {
  const RunResult a = run_cli("weyl-check --count 8 --seed 99 --out cli_a.csv");
  const RunResult b = run_cli("weyl-check --count 8 --seed 99 --out cli_b.csv");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  const std::string fa = slurp("cli_a.csv");
  CHECK(!fa.empty());
  CHECK(fa == slurp("cli_b.csv"));
  // a different seed must actually change the data
  const RunResult c = run_cli("weyl-check --count 8 --seed 100 --out cli_c.csv");
  CHECK(c.exit_code == 0);
  CHECK(slurp("cli_c.csv") != fa);
}

TEST_CASE("unknown config key is rejected with exit 2 naming it") {
  {
    std::ofstream f("cli_bad.json");
    f << "{\"r-maxx\": 3.0}\n";
  }
  const RunResult r = run_cli("discord-curve --config cli_bad.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("r-maxx") != std::string::npos);
}

TEST_CASE("config file overrides flags which override defaults") {
  {
    std::ofstream f("cli_prec.json");
    f << "{\"r-max\": 2.0}\n";
  }
  const RunResult r =
      run_cli("discord-curve --config cli_prec.json --r-max 9 --points 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("r-max=2") != std::string::npos);   // config wins
  CHECK(r.out.find("points=3") != std::string::npos);  // flag beats default
}

TEST_CASE("config type mismatch names the key") {
  {
    std::ofstream f("cli_type.json");
    f << "{\"points\": \"many\"}\n";
  }
  const RunResult r = run_cli("discord-curve --config cli_type.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("points") != std::string::npos);
}

TEST_CASE("invalid parameter values exit 2 through the library validation") {
  const RunResult r = run_cli("pseudospin-bell --family nonesuch");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("family") != std::string::npos);
}

TEST_CASE("optimizer output is JSON with the value in the quantum window") {
  const RunResult r =
      run_cli("pseudospin-bell --family bw --r 1 --phi 0 --truncation 41");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"truncation_used\": 41") != std::string::npos);
  const auto pos = r.out.find("\"value\":");
  REQUIRE(pos != std::string::npos);
  const double value = std::strtod(r.out.c_str() + pos + 8, nullptr);
  CHECK(value > 2.0);
  CHECK(value <= 2.0 * std::sqrt(2.0) + 1e-6);
}

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (argv[i][0] != '-') cli_path = argv[i];
  if (cli_path.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary> [doctest args]\n");
    return 2;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
