// Drives the built binary end to end through std::system, checking the
// documented exit-code contract (0 proved, 2 incumbent, 1 error) and the
// file formats.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cng/io.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace cng;

namespace {

const std::string kCli = CNG_CLI_PATH;
const std::string kData = CNG_DATA_DIR;

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run(const std::string& args) {
  const fs::path out_path = fs::temp_directory_path() / "cng_cli_out.txt";
  const std::string command = kCli + " " + args + " > " + out_path.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  Run result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

fs::path sandbox() {
  const fs::path dir = fs::temp_directory_path() / "cng_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("solve: proved equilibrium exits 0 and writes the result schema") {
  const fs::path result_path = sandbox() / "example1_result.json";
  const Run solve_run =
      run("solve " + kData + "/example1.json -o " + result_path.string());
  CHECK(solve_run.exit_code == 0);

  const EquilibriumResult result = load_result(result_path.string());
  CHECK(result.status == SolveStatus::ProvedOptimalNe);
  CHECK(result.exact);
  CHECK(result.defender_value == doctest::Approx(26.2).epsilon(1e-9));

  // raw field spelling
  const std::string text = read_file(result_path.string());
  for (const char* key : {"\"x\"", "\"alpha\"", "\"phi\"", "\"exact\"",
                          "\"defender_payoff\"", "\"attacker_payoff\"", "\"objective\"",
                          "\"objective_value\"", "\"iterations\"", "\"cuts\"",
                          "\"phi_ub\"", "\"wall_time_s\"", "\"status\""}) {
    CHECK(text.find(key) != std::string::npos);
  }
}

TEST_CASE("solve: missing file exits 1") {
  CHECK(run("solve /nonexistent/path.json").exit_code == 1);
}

TEST_CASE("solve: objective flag reaches the solver") {
  const Run atk = run("solve " + kData + "/fixture_n2.json --objective attacker");
  CHECK(atk.exit_code == 0);
  CHECK(atk.output.find("\"objective\": \"attacker\"") != std::string::npos);

  CHECK(run("solve " + kData + "/fixture_n2.json --objective bogus").exit_code == 1);
}

TEST_CASE("solve: a tiny time limit yields the incumbent exit code 2") {
  const Run limited = run("solve " + kData + "/example1.json --time-limit 1e-9");
  CHECK(limited.exit_code == 2);
  CHECK(limited.output.find("INCUMBENT_ON_LIMIT") != std::string::npos);
}

TEST_CASE("generate: single instance and the full grid") {
  const fs::path dir = sandbox();
  const fs::path single = dir / "gen_single.json";
  const Run gen = run("generate --n 10 --eta 0.6 --gamma 0 --dfrac 0.30 --afrac 0.10"
                      " --seed 7 -o " + single.string());
  CHECK(gen.exit_code == 0);
  const CngInstance instance = load_instance(single.string());
  CHECK(instance.n == 10);
  double sum_d = 0.0;
  for (double w : instance.defender_weights) sum_d += w;
  CHECK(instance.defender_budget == doctest::Approx(0.30 * sum_d).epsilon(1e-15));

  const fs::path grid_dir = dir / "grid";
  fs::remove_all(grid_dir);
  const Run grid = run("generate --grid --n 4,5 --seed 7 -o " + grid_dir.string());
  CHECK(grid.exit_code == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(grid_dir)) {
    if (entry.path().extension() == ".json") ++files;
  }
  CHECK(files == 48);

  CHECK(run("generate --n 0 -o " + (dir / "bad.json").string()).exit_code == 1);
  CHECK(run("generate --n 5 --eta 0.7 -o " + (dir / "bad.json").string()).exit_code == 1);
}

TEST_CASE("verify: accepts every bundled fixture the solver handles") {
  const fs::path dir = sandbox();
  for (const std::string name : {"example1", "fixture_n2", "fixture_cycle"}) {
    const fs::path result_path = dir / (name + "_res.json");
    const Run solve_run =
        run("solve " + kData + "/" + name + ".json -o " + result_path.string());
    CHECK(solve_run.exit_code == 0);
    const Run verify_run = run("verify --instance " + kData + "/" + name +
                               ".json --result " + result_path.string());
    CHECK(verify_run.exit_code == 0);
    CHECK(verify_run.output.find("OK") != std::string::npos);
  }
}

TEST_CASE("verify: rejects a doctored result") {
  const fs::path dir = sandbox();
  const fs::path result_path = dir / "doctored.json";
  run("solve " + kData + "/fixture_n2.json -o " + result_path.string());
  EquilibriumResult result = load_result(result_path.string());
  result.defender_value += 1.0;  // falsify the payoff
  save_result(result, result_path.string());
  const Run verify_run = run("verify --instance " + kData +
                             "/fixture_n2.json --result " + result_path.string());
  CHECK(verify_run.exit_code == 1);
  CHECK(verify_run.output.find("mismatch") != std::string::npos);
}

TEST_CASE("pos and poa subcommands") {
  const Run pos = run("pos " + kData + "/fixture_n2.json");
  CHECK(pos.exit_code == 0);
  CHECK(pos.output.find("\"pos\": 1.83") != std::string::npos);

  const Run poa = run("poa " + kData + "/fixture_n2.json");
  CHECK(poa.exit_code == 0);
  CHECK(poa.output.find("\"poa\": 2") != std::string::npos);
}

TEST_CASE("ingest writes a solvable instance") {
  const fs::path out = sandbox() / "ingested.json";
  const Run ingest_run = run("ingest " + kData + "/snapshot_small.json --eta 0.8"
                             " --dfrac 0.75 --afrac 0.30 -o " + out.string());
  CHECK(ingest_run.exit_code == 0);
  const CngInstance instance = load_instance(out.string());
  CHECK(instance.n == 6);
  CHECK_FALSE(instance.edges.empty());  // provenance retained
  CHECK(instance.epsilon == doctest::Approx(1.0));
  CHECK(run("solve " + out.string()).exit_code == 0);
}

TEST_CASE("report emits per-instance rows plus per-n aggregates") {
  const fs::path dir = sandbox() / "batch";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy_file(kData + "/example1.json", dir / "example1.json");
  fs::copy_file(kData + "/fixture_n2.json", dir / "fixture_n2.json");

  const fs::path csv_path = sandbox() / "report.csv";
  const Run report = run("report " + dir.string() + " --jobs 2 -o " + csv_path.string());
  CHECK(report.exit_code == 0);
  const std::string csv = read_file(csv_path.string());
  CHECK(csv.find("row,n,pos,pos_min,pos_max,poa,poa_min,poa_max,phi,f_d,f_a,time_s,status")
        != std::string::npos);
  CHECK(csv.find("example1.json,5,1.98") != std::string::npos);
  CHECK(csv.find("fixture_n2.json,2,1.83") != std::string::npos);
  // one aggregate row per n
  CHECK(csv.find("aggregate,2,") != std::string::npos);
  CHECK(csv.find("aggregate,5,") != std::string::npos);
  CHECK(csv.find("1/1_proved") != std::string::npos);
}
