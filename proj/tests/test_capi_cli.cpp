#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "spherespin/spherespin.h"

namespace {

using nlohmann::json;

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const std::string cli = SPHERESPIN_CLI_PATH;

}  // namespace

TEST_CASE("c api verify") {
  ssp_report* rep = ssp_verify(R"({"case":"su","n":2,"params":{"a":1.0,"b":1.0}})");
  REQUIRE(rep != nullptr);
  CHECK(ssp_report_passed(rep) == 1);
  CHECK(ssp_report_status(rep) == SSP_OK);

  json j = json::parse(ssp_report_json(rep));
  CHECK(j.at("passed").get<bool>());
  CHECK(j.at("cases").size() == 1);
  CHECK(j["cases"][0].at("case").get<std::string>() == "su(n=2)");
  for (const auto& c : j["cases"][0].at("checks")) CHECK(c.at("pass").get<bool>());

  std::string md = ssp_report_markdown(rep);
  CHECK(md.find("ALL CASES PASSED") != std::string::npos);
  ssp_report_free(rep);
}

TEST_CASE("c api configuration errors") {
  CHECK(ssp_verify(R"({"case":"nonsense"})") == nullptr);
  CHECK(ssp_last_status() == SSP_CONFIG_ERROR);
  CHECK(std::string(ssp_last_error()).find("nonsense") != std::string::npos);

  CHECK(ssp_verify(R"({"case":"su","params":{"zz":1.0}})") == nullptr);
  CHECK(ssp_last_status() == SSP_CONFIG_ERROR);

  CHECK(ssp_verify(R"({"case":"su","params":{"a":-1.0,"b":1.0}})") == nullptr);
  CHECK(ssp_last_status() == SSP_CONFIG_ERROR);

  CHECK(ssp_verify("{ not json") == nullptr);
  CHECK(ssp_last_status() == SSP_CONFIG_ERROR);

  CHECK(ssp_table("nope", nullptr) == nullptr);
  CHECK(ssp_last_status() == SSP_CONFIG_ERROR);
}

TEST_CASE("c api table and round selectors") {
  ssp_report* rep = ssp_table("s7forms", R"({"seed": 3})");
  REQUIRE(rep != nullptr);
  CHECK(ssp_report_passed(rep) == 1);
  std::string md = ssp_report_markdown(rep);
  CHECK(md.find("s7forms") != std::string::npos);
  ssp_report_free(rep);

  ssp_report* round = ssp_verify(R"({"case":"round"})");
  REQUIRE(round != nullptr);
  CHECK(ssp_report_passed(round) == 1);
  ssp_report_free(round);
}

TEST_CASE("cli verify exit codes and output") {
  auto ok = run_cmd(cli + " verify --case su --n 2 --param a=1 --param b=1");
  CHECK(ok.exit_code == 0);
  json j = json::parse(ok.out);
  CHECK(j.at("passed").get<bool>());

  // config errors exit with 2
  CHECK(run_cmd(cli + " verify --case su --param q=1").exit_code == 2);
  CHECK(run_cmd(cli + " verify --case wat").exit_code == 2);
  CHECK(run_cmd(cli + " verify --case su --param a=abc").exit_code == 2);

  // an absurdly tight tolerance empties the invariant spaces: checks fail, exit 1
  auto tight = run_cmd(cli + " verify --case su --n 2 --tol 1e-30");
  CHECK(tight.exit_code == 1);
  CHECK(!json::parse(tight.out).at("passed").get<bool>());
}

TEST_CASE("cli config file, output file and determinism") {
  const std::string cfg_path = "/tmp/spherespin_test_cfg.json";
  const std::string out_path = "/tmp/spherespin_test_out.json";
  {
    std::ofstream f(cfg_path);
    f << R"({"case":"g2","format":"json"})";
  }
  auto r = run_cmd(cli + " verify --config " + cfg_path + " --out " + out_path);
  CHECK(r.exit_code == 0);
  std::ifstream f(out_path);
  json j;
  f >> j;
  CHECK(j.at("passed").get<bool>());

  // markdown table output
  auto md = run_cmd(cli + " table --which s7forms --format markdown");
  CHECK(md.exit_code == 0);
  CHECK(md.out.find("| entry |") != std::string::npos);

  // deterministic given config and seed (up to wall-clock timings)
  auto a1 = run_cmd(cli + " table --which table2 --seed 11");
  auto a2 = run_cmd(cli + " table --which table2 --seed 11");
  json j1 = json::parse(a1.out), j2 = json::parse(a2.out);
  for (json* j : {&j1, &j2})
    for (auto& c : (*j)["cases"]) c.erase("wall_time_sec");
  CHECK(j1 == j2);
}
