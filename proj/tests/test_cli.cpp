// SPDX-License-Identifier: Apache-2.0
//
// End-to-end coverage of the command-line binary, located through the
// NCIC_CLI_BIN environment variable (set by the test harness).

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <doctest.h>
#include <json.hpp>

#include "ncic/records.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

std::string cli_binary() {
  const char* path = std::getenv("NCIC_CLI_BIN");
  REQUIRE_MESSAGE(path != nullptr,
                  "NCIC_CLI_BIN must point at the command-line binary");
  return path;
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + (env.empty() ? "" : " ") + "'" + cli_binary() + "' " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char ch : text) {
    if (ch == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("region listing is deterministic and round-trips as csv") {
  const std::string args = "gdof --scheme rs --alpha 0.6 --coherence 5";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.rfind("record,index,a,b,c,x,y,value\n", 0) == 0);
  CHECK(first.output.find("sym_gdof") != std::string::npos);
  CHECK(first.output.find("vertex") != std::string::npos);
  CHECK(first.output.find('\r') == std::string::npos);

  const ncic::RecordTable parsed = ncic::parse_csv(first.output);
  CHECK(ncic::to_csv(parsed) == first.output);
}

TEST_CASE("sweep emits one row per scheme and grid point") {
  const CliResult result = run_cli(
      "sweep --schemes tdm,tin --coherence 4 --alpha-min 0 --alpha-max 1 "
      "--steps 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.rfind("alpha,scheme,sym_gdof\n", 0) == 0);
  CHECK(count_lines(result.output) == 7);  // header + 3 alphas x 2 schemes
  CHECK(result.output.find("0.000000,tdm,0.375000\n") != std::string::npos);
  CHECK(result.output.find("0.500000,tdm,0.375000\n") != std::string::npos);
  CHECK(result.output.find("1.000000,tin,0.000000\n") != std::string::npos);
}

TEST_CASE("rates respect seed precedence") {
  const std::string args =
      "rates --snr-db-list 16 --schemes tdm --samples 2000 --alpha 1 "
      "--coherence 5 --link-gain 0.1";
  const CliResult flagged = run_cli(args + " --seed 9");
  CHECK(flagged.exit_code == 0);
  CHECK(flagged.output.rfind("snr_db,scheme,rate,stderr\n", 0) == 0);
  CHECK(count_lines(flagged.output) == 2);

  const CliResult env_same = run_cli(args, "NCIC_SEED=9");
  CHECK(env_same.output == flagged.output);

  const CliResult env_loses = run_cli(args + " --seed 9", "NCIC_SEED=123");
  CHECK(env_loses.output == flagged.output);

  const CliResult env_other = run_cli(args, "NCIC_SEED=123");
  CHECK(env_other.exit_code == 0);
  CHECK(env_other.output != flagged.output);

  const CliResult bad_env = run_cli(args, "NCIC_SEED=abc");
  CHECK(bad_env.exit_code == 2);
  CHECK(bad_env.output.find("NCIC_SEED") != std::string::npos);
}

TEST_CASE("usage errors name the offending flag and exit with 2") {
  struct Case {
    const char* args;
    const char* needle;
  };
  const Case cases[] = {
      {"gdof --scheme bogus --alpha 1 --coherence 5", "--scheme"},
      {"gdof --scheme rs --alpha -1 --coherence 5", "--alpha"},
      {"gdof --scheme rs --alpha 1 --coherence 1", "--coherence"},
      {"sweep --schemes tdm --coherence 5 --alpha-min 1 --alpha-max 0 --steps 2",
       "--alpha-min"},
      {"sweep --schemes tdm --coherence 5 --alpha-min 0 --alpha-max 1 --steps 1",
       "--steps"},
      {"rates --snr-db-list 16 --samples 10", "--samples"},
      {"rates --snr-db-list 16 --schemes rs", "--schemes"},
      {"slope --term nope --alpha 1 --coherence 5 --exponents 8,10", "--term"},
      {"gdof --alpha 1 --coherence 5", "--scheme"},  // missing required flag
  };
  for (const Case& c : cases) {
    const CliResult result = run_cli(c.args);
    INFO("args: ", c.args, "\noutput: ", result.output);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find(c.needle) != std::string::npos);
  }

  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("validate --full --fast").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("gdof --help").exit_code == 0);
}

TEST_CASE("json format mirrors the csv rows") {
  const std::string args = "gdof --scheme tdm --alpha 1 --coherence 4";
  const CliResult csv = run_cli(args);
  const CliResult json = run_cli(args + " --format json");
  CHECK(json.exit_code == 0);

  const auto parsed = nlohmann::ordered_json::parse(json.output);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == count_lines(csv.output) - 1);
  std::vector<std::string> keys;
  for (const auto& item : parsed[0].items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"record", "index", "a", "b", "c", "x",
                                         "y", "value"});
}

TEST_CASE("slope command reports the fitted and table values") {
  const CliResult result = run_cli(
      "slope --term IX1_Y1_gU2 --alpha 0.4 --coherence 5 --exponents 8,10,12");
  CHECK(result.exit_code == 0);
  CHECK(result.output.rfind("term,alpha,coherence,numeric,expected,abs_diff\n",
                            0) == 0);
  CHECK(result.output.find("IX1_Y1_gU2") != std::string::npos);
  CHECK(result.output.find("3.600000") != std::string::npos);
}

TEST_CASE("--out writes exactly what stdout would carry") {
  const std::string path = "cli_out_test.csv";
  const std::string args = "gdof --scheme rs-fb --alpha 1.2 --coherence 5";
  const CliResult direct = run_cli(args);
  const CliResult filed = run_cli(args + " --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());

  std::ifstream stream(path, std::ios::binary);
  std::stringstream content;
  content << stream.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());

  CHECK(run_cli(args + " --out /nonexistent-dir/x.csv").exit_code == 2);
}

TEST_CASE("validate runs the fast suite and reports check lines") {
  const CliResult result = run_cli("validate --fast");
  // Every check passes except the stated compact-form equality, which is
  // genuinely false without feedback (see the elimination tests), so the
  // suite reports exactly that one failure.
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("c3-regime-continuity") != std::string::npos);
  CHECK(result.output.find("mmse-identities") != std::string::npos);
  CHECK(result.output.find("PASS c5-projection-is-direct-plus-split-caps") !=
        std::string::npos);
  std::size_t pass_lines = 0;
  std::size_t fail_lines = 0;
  std::size_t start = 0;
  while (start < result.output.size()) {
    std::size_t end = result.output.find('\n', start);
    if (end == std::string::npos) end = result.output.size();
    const std::string_view line{result.output.data() + start, end - start};
    if (line.starts_with("PASS ")) ++pass_lines;
    if (line.starts_with("FAIL ")) {
      ++fail_lines;
      CHECK(line.starts_with("FAIL c5-elimination-oracle "));
    }
    start = end + 1;
  }
  CHECK(fail_lines == 1);
  CHECK(pass_lines + fail_lines == count_lines(result.output));
}
