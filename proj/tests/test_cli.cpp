#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/qpriv_cli_capture.txt";
  const std::string cmd =
      std::string(QPRIV_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CliResult result;
  result.code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

std::string scenario(const char* name) {
  return std::string(QPRIV_SCENARIO_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("compute on the bundled fixtures exits cleanly") {
  const CliResult ghz = run_cli("compute --scenario " + scenario("ghz_identity.scn"));
  CHECK(ghz.code == 0);
  CHECK(ghz.output.find("VERDICT: PASS") != std::string::npos);

  const CliResult bell =
      run_cli("compute --scenario " + scenario("bell_depolarizing.scn") +
              " --format records");
  CHECK(bell.code == 0);
  // noiseless depolarizing point: one full bit of coherent information
  CHECK(bell.output.find("\"coherent_info\":1,") != std::string::npos);
}

TEST_CASE("records output obeys the schema") {
  const std::vector<std::string> runs = {
      "compute --scenario " + scenario("ghz_identity.scn") + " --format records",
      "compute --scenario " + scenario("bell_depolarizing.scn") + " --format records",
      "verify --trials 3 --seed 11 --format records",
      "sweep --channel phase-damping --range 0:1:0.5 --format records",
  };
  for (const std::string& args : runs) {
    CAPTURE(args);
    const CliResult r = run_cli(args);
    REQUIRE(r.code == 0);
    std::istringstream lines(r.output);
    std::string line;
    int checks = 0, metas = 0, summaries = 0;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const nlohmann::json rec = nlohmann::json::parse(line);
      REQUIRE(rec.contains("kind"));
      const std::string kind = rec["kind"];
      if (kind == "meta") {
        ++metas;
        CHECK(rec.contains("version"));
        CHECK(rec.contains("seed"));
        CHECK(rec.contains("config"));
      } else if (kind == "check") {
        ++checks;
        for (const char* key :
             {"check", "left", "right", "slack", "tolerance", "verdict", "seed"}) {
          CAPTURE(key);
          CHECK(rec.contains(key));
        }
      } else if (kind == "summary") {
        ++summaries;
        CHECK(rec["failures"].get<int>() == 0);
        CHECK(rec["checks_run"].get<int>() == checks);
      }
    }
    CHECK(metas == 1);
    CHECK(summaries == 1);
    CHECK(checks > 0);
  }
}

TEST_CASE("verify is byte-identical for a repeated seed") {
  const std::string out1 = "/tmp/qpriv_det_1.jsonl";
  const std::string out2 = "/tmp/qpriv_det_2.jsonl";
  const std::string args = "verify --trials 5 --seed 42 --format records --out ";
  CHECK(run_cli(args + out1).code == 0);
  CHECK(run_cli(args + out2).code == 0);
  const std::string a = slurp(out1);
  CHECK(!a.empty());
  CHECK(a == slurp(out2));
}

TEST_CASE("exit codes follow the contract") {
  // 0: clean verify
  CHECK(run_cli("verify --trials 2 --seed 7").code == 0);

  // 1: an impossibly tight tolerance trips the identity check's rounding dust
  const CliResult fail =
      run_cli("verify --trials 5 --seed 42 --checks holevo-identity "
              "--tolerance 1e-300");
  CHECK(fail.code == 1);
  CHECK(fail.output.find("FAIL") != std::string::npos);

  // 2: config errors
  CHECK(run_cli("verify --tolerance -1").code == 2);
  CHECK(run_cli("verify --checks no-such-family").code == 2);
  CHECK(run_cli("compute --scenario /does/not/exist.scn").code == 2);
  CHECK(run_cli("sweep --channel identity").code == 2);
  CHECK(run_cli("bogus-subcommand").code == 2);
}

TEST_CASE("malformed scenarios produce a diagnostic and no partial output") {
  const std::string bad = "/tmp/qpriv_bad.scn";
  {
    std::ofstream out(bad);
    out << R"({"initial": {"dims": [2, "x"], "vector": []}, "legs": []})";
  }
  const std::string out_path = "/tmp/qpriv_bad_report.txt";
  std::remove(out_path.c_str());
  const CliResult r =
      run_cli("compute --scenario " + bad + " --out " + out_path);
  CHECK(r.code == 2);
  CHECK(r.output.find("error") != std::string::npos);
  CHECK(r.output.find("dims") != std::string::npos);
  CHECK_FALSE(fs::exists(out_path));
}

TEST_CASE("sweep emits a monotone parameter table") {
  const CliResult r =
      run_cli("sweep --channel depolarizing --range 0:1:0.25 --format table");
  CHECK(r.code == 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "param,coherent_info,chi_receiver,chi_eve,p_min,disturbance");
  double prev = -1.0, prev_ic = 2.0;
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    const double param = std::stod(cell);
    CHECK(param > prev);
    prev = param;
    std::getline(cells, cell, ',');
    const double ic = std::stod(cell);
    CHECK(ic <= prev_ic + 1e-9);
    prev_ic = ic;
  }
  CHECK(rows == 5);
}

TEST_CASE("amplitude damping sweep crosses zero coherent information at the midpoint") {
  const CliResult r = run_cli(
      "sweep --channel amplitude-damping --range 0:1:0.05 --format records");
  CHECK(r.code == 0);
  std::istringstream lines(r.output);
  std::string line;
  bool found = false;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const nlohmann::json rec = nlohmann::json::parse(line);
    if (rec["kind"] == "sweep" && std::abs(rec["param"].get<double>() - 0.5) < 1e-9) {
      found = true;
      CHECK(std::abs(rec["coherent_info"].get<double>()) <= 1e-8);
    }
  }
  CHECK(found);
}

TEST_CASE("out files are written when requested") {
  const std::string out_path = "/tmp/qpriv_out.csv";
  std::remove(out_path.c_str());
  const CliResult r = run_cli("compute --scenario " + scenario("w_identity.scn") +
                              " --format table --out " + out_path);
  CHECK(r.code == 0);
  CHECK(fs::exists(out_path));
  CHECK(slurp(out_path).find("check,left,right") == 0);
}
