#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

// CLI_PATH and GOLDEN_DIR are injected by the build.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("tables match the golden files byte for byte") {
  CHECK(run_cli("tables --table 1 --max-n 7").out == golden("table1.csv"));
  CHECK(run_cli("tables --table 2 --max-n 5").out == golden("table2.csv"));
  CHECK(run_cli("tables --table 3 --max-n 5").out == golden("table3.csv"));
}

TEST_CASE("determinism: identical configs give identical bytes") {
  std::string a = run_cli("interval --onc 7 --format json").out;
  std::string b = run_cli("interval --onc 7 --format json").out;
  CHECK(a == b);
  CHECK(run_cli("hurwitz --perm \"(1 2)(3 4)\" --n 4 --report json").out ==
        run_cli("hurwitz --perm \"(1 2)(3 4)\" --n 4 --report json").out);
  CHECK(run_cli("mdiv --conjectures --max-n 2 --max-m 2 --format csv").out ==
        run_cli("mdiv --conjectures --max-n 2 --max-m 2 --format csv").out);
  // Worker count must not affect output bytes.
  CHECK(run_cli("tables --table 2 --max-n 4 --threads 4").out ==
        run_cli("tables --table 2 --max-n 4 --threads 1").out);
}

TEST_CASE("zeta and moebius subcommands") {
  RunResult z = run_cli("zeta --onc 7 --q 2");
  CHECK(z.exit_code == 0);
  CHECK(z.out == "30\n");
  RunResult m = run_cli("moebius --onc 5");
  CHECK(m.exit_code == 0);
  CHECK(m.out == "4\n");
}

TEST_CASE("onc subcommand and membership exit codes") {
  RunResult count = run_cli("onc --n 7");
  CHECK(count.exit_code == 0);
  CHECK(count.out.find("30") != std::string::npos);
  CHECK(run_cli("onc --n 7 --perm \"(1 4 5)\"").exit_code == 0);
  CHECK(run_cli("onc --n 5 --perm \"(2 4 5)\"").exit_code == 2);
}

TEST_CASE("hurwitz subcommand") {
  RunResult r = run_cli("hurwitz --perm \"(1 2)(3 4)\" --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("orbits: 2") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("tables --table 9").exit_code == 1);
  CHECK(run_cli("zeta --onc 7 --q notanumber").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify suites") {
  RunResult all = run_cli("verify --suite all");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("0 failed") != std::string::npos);
  CHECK(run_cli("verify --suite zeta").exit_code == 0);
  CHECK(run_cli("verify --suite hurwitz").exit_code == 0);
  CHECK(run_cli("verify --suite no-such-suite").exit_code == 1);
}

TEST_CASE("bijection phi on the worked example") {
  RunResult r = run_cli(
      "bijection phi --perm \"(1 14 15)(3 4 7)(8 9 10 11 12)\" --n 17 "
      "--format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"color\"") != std::string::npos);
}
