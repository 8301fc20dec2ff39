#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the built binary with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SPARSEKL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("coeff command", "[cli]") {
  auto r = run_cli("coeff --m 3 --d 3 --c 4 --i 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  r = run_cli("coeff --m 3 --d 3 --c 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[1, 9]\n");

  r = run_cli("poly --m 0 --d 5 --c 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[1]\n");
}

TEST_CASE("coeff bound check and override", "[cli]") {
  CHECK(run_cli("coeff --m 3 --d 3 --c 6 --i 1").exit_code == 2);
  const auto r = run_cli("coeff --m 3 --d 3 --c 6 --i 1 --unchecked");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-3\n");
}

TEST_CASE("coeff from a ch document", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "sparsekl_cli_test_ch.json";
  {
    std::ofstream out(path);
    out << R"({"m":3,"d":3,"ch":[[1,2,3],[1,4,5],[2,4,6],[3,5,6]]})";
  }
  const auto r = run_cli("poly --ch-file " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[1, 1]\n");
  std::filesystem::remove(path);
}

TEST_CASE("skyt command", "[cli]") {
  auto r = run_cli("skyt --a 4 --i 1 --b 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "9\n");

  r = run_cli("skyt --a 1 --i 2 --b 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n");

  r = run_cli("skyt --a 2 --i 1 --b 2 --enumerate");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "enumerated 2 fillings"));

  CHECK(run_cli("skyt --a 8 --i 2 --b 8 --enumerate").exit_code == 4);
}

TEST_CASE("verify command and mutation test", "[cli]") {
  const auto ok = run_cli("verify --max-ground 5");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "pass"));

  const auto bad = run_cli("verify --max-ground 5 --inject-fault --format json");
  CHECK(bad.exit_code == 3);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j["pass"] == false);
  CHECK(j["results"].contains("witness"));
  CHECK(j["results"]["witness"].contains("ch"));
}

TEST_CASE("bounds command", "[cli]") {
  const auto r = run_cli("bounds --m 3 --d 3 --exact --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["coding_bound"] == "5");
  CHECK(j["results"]["johnson_bound"] == "5");
  CHECK(j["results"]["exact"] == 4);

  const auto r2 = run_cli("bounds --m 2 --d 5 --format json");
  const auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j2["results"]["coding_bound"] == "7");
  CHECK(j2["results"]["johnson_bound"] == "4");
  CHECK(j2["results"]["best"] == "4");
}

TEST_CASE("table emits identical numbers in json and csv", "[cli]") {
  const std::string args = "table --m-range 1:4 --d-range 1:5 --c-policy zero";
  const auto jr = run_cli(args + " --format json");
  const auto cr = run_cli(args + " --format csv");
  REQUIRE(jr.exit_code == 0);
  REQUIRE(cr.exit_code == 0);

  std::vector<std::string> json_rows;
  const auto parsed = nlohmann::json::parse(jr.out);
  for (const auto& row : parsed["results"]["rows"])
    json_rows.push_back(std::to_string(row["m"].get<int>()) + "," +
                        std::to_string(row["d"].get<int>()) + "," +
                        row["c"].get<std::string>() + "," +
                        std::to_string(row["i"].get<int>()) + "," +
                        row["coefficient"].get<std::string>());

  std::vector<std::string> csv_rows;
  std::istringstream lines(cr.out);
  std::string line;
  std::getline(lines, line);  // header
  CHECK(line == "m,d,c,i,coefficient");
  while (std::getline(lines, line))
    if (!line.empty()) csv_rows.push_back(line);

  REQUIRE(json_rows == csv_rows);
}

TEST_CASE("table output is deterministic", "[cli]") {
  const std::string args = "table --m-range 1:3 --d-range 1:6 --c-policy max-bound --format csv";
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("verify is deterministic given the seed", "[cli]") {
  const std::string args = "verify --max-ground 8 --samples 3 --seed 11 --format json";
  const auto first = nlohmann::json::parse(run_cli(args).out);
  const auto second = nlohmann::json::parse(run_cli(args).out);
  CHECK(first["results"] == second["results"]);
  CHECK(first["results"]["sampled_instances"] > 0);
}

TEST_CASE("table explicit c policy", "[cli]") {
  const auto r = run_cli("table --m-range 3:3 --d-range 3:3 --c-policy explicit --c 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "3,3,4,0,1\n"));
  CHECK(contains(r.out, "3,3,4,1,1\n"));
}

TEST_CASE("input validation exits with code 2", "[cli]") {
  CHECK(run_cli("coeff --m 3 --d 3 --c -1").exit_code == 2);
  CHECK(run_cli("coeff --d 3 --c 1").exit_code == 2);  // --m and --d travel together
  CHECK(run_cli("coeff --m 3 --d 3 --c 1 --ch-file x.json").exit_code == 2);
  CHECK(run_cli("table --m-range 3:1 --d-range 1:2").exit_code == 2);
  CHECK(run_cli("table --m-range 1:2 --d-range 1:2 --c-policy explicit").exit_code == 2);
}
