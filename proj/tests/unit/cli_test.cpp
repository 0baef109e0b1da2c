#include <doctest.h>

#ifdef MDISC_CLI_PATH

#include <cstdio>
#include <string>

#include "mdisc/json_io.hpp"
#include "mdisc/povm.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MDISC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("closed-form reproduction passes and is byte-stable") {
  const auto first = run_cli("--json --seed 7 reproduce closed-forms");
  CHECK(first.exit_code == 0);
  const auto second = run_cli("--json --seed 7 reproduce closed-forms");
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("reproduce no-such-table").exit_code == 2);
  CHECK(run_cli("validate no-such-tag").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("validate certifies the catalog constructions") {
  CHECK(run_cli("validate table1").exit_code == 0);
  CHECK(run_cli("validate ic:3").exit_code == 0);
  CHECK(run_cli("validate dplus1:4").exit_code == 0);
  // Valid POVMs whose construction condition fails still exit nonzero.
  CHECK(run_cli("validate weyl:3:comp").exit_code == 1);
}

TEST_CASE("witness emits a json verdict") {
  const auto fired = run_cli("--json witness --state werner:0.9 trine --restarts 20");
  CHECK(fired.exit_code == 0);
  CHECK(fired.output.find("\"verdict\": \"steerable-witnessed\"") != std::string::npos);

  const auto quiet = run_cli("--json witness --state werner:0.6 trine --restarts 20");
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.output.find("\"verdict\": \"inconclusive\"") != std::string::npos);

  // A weakly entangled pure state still fires against the trine pair.
  const auto weak = run_cli("--json witness --state pure2q:0.3 trine --restarts 20");
  CHECK(weak.exit_code == 0);
  CHECK(weak.output.find("\"verdict\": \"steerable-witnessed\"") != std::string::npos);

  // Perfect discrimination of the dimension-4 projective set leaves a gap of
  // roughly 1 - 0.7752.
  const auto big = run_cli("--json witness --state maxent:4 table1 --restarts 150");
  CHECK(big.exit_code == 0);
  CHECK(big.output.find("\"verdict\": \"steerable-witnessed\"") != std::string::npos);
  const auto gap_pos = big.output.find("\"gap\": 0.22");
  CHECK(gap_pos != std::string::npos);
}

TEST_CASE("MDISC_SEED provides the default seed") {
  const std::string cmd = "MDISC_SEED=123 " + std::string(MDISC_CLI_PATH) +
                          " --json reproduce closed-forms 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) output.append(buf, n);
  pclose(pipe);
  CHECK(output.find("\"seed\": 123") != std::string::npos);
}

TEST_CASE("export round-trips through the library parser") {
  const auto exported = run_cli("export trine");
  CHECK(exported.exit_code == 0);
  const auto ens = mdisc::ensemble_from_json(exported.output);
  CHECK(ens.dim == 2);
  CHECK(ens.settings() == 2);
  CHECK(ens.outcomes == 3);
  CHECK(mdisc::validate(ens).all_valid());
}

TEST_CASE("compute commands run end to end") {
  const auto d = run_cli("--json compute-d trine --restarts 20");
  CHECK(d.exit_code == 0);
  CHECK(d.output.find("\"value\"") != std::string::npos);
  const auto b = run_cli("--json compute-b trine --state maxent:2 --bob proof");
  CHECK(b.exit_code == 0);
  CHECK(b.output.find("exact-bob") != std::string::npos);
}

}  // TEST_SUITE

#endif  // MDISC_CLI_PATH
