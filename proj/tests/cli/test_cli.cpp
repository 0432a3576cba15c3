// Runs the command-line tool as a subprocess and checks exit codes and output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& args, const std::string& out_file = "cli_out.txt") {
  const std::string cmd = std::string(EQUIGEO_CLI_PATH) + " " + args + " > " + out_file + " 2> cli_err.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("analyze classifies Sp(2)U(1)/Sp(1)U(1) to a line") {
  REQUIRE(run("analyze --space sp-u1-sphere --n 1") == 0);
  const auto j = nlohmann::json::parse(slurp("cli_out.txt"));
  CHECK(j["classification"]["kind"] == "linear_subspace");
  CHECK(j["classification"]["basis"].size() == 1);
  CHECK(j["theorem_check"]["match"] == true);
  CHECK(slurp("cli_err.txt").find("Sp(2)U(1)/Sp(1)U(1)") != std::string::npos);
}

TEST_CASE("analyze reports the empty set for Sp(2)/Sp(1)") {
  REQUIRE(run("analyze --space sp-sphere --n 1") == 0);
  CHECK(nlohmann::json::parse(slurp("cli_out.txt"))["classification"]["kind"] == "empty");
}

TEST_CASE("analyze notes the absence of fixed points") {
  REQUIRE(run("analyze --space so-sphere --n 4") == 0);
  const auto j = nlohmann::json::parse(slurp("cli_out.txt"));
  CHECK(j["classification"].is_null());
  CHECK(j["dims"]["m0"] == 0);
  CHECK(slurp("cli_out.txt").find("no invariant non-Riemannian Randers metrics") != std::string::npos);
}

TEST_CASE("analyze writes to --out and is byte-identical across runs") {
  REQUIRE(run("analyze --space thm2-su-su --n1 3 --n2 2 --seed 5 --out cli_a.json") == 0);
  REQUIRE(run("analyze --space thm2-su-su --n1 3 --n2 2 --seed 5 --out cli_b.json") == 0);
  CHECK(!slurp("cli_a.json").empty());
  CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
}

TEST_CASE("invalid arguments exit with status 2") {
  CHECK(run("analyze --space torus --n 2") == 2);
  CHECK(slurp("cli_err.txt").find("thm2-so-su") != std::string::npos);
  CHECK(run("analyze --space so-sphere --n 1") == 2);
  CHECK(run("analyze --space thm2-su-su --n1 1 --n2 1") == 2);
  CHECK(run("analyze --n 2") == 2);
  CHECK(run("analyze --space su-sphere --n two") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("check-vector exit codes on SU(3)/SU(2)") {
  // The adapted m-basis lists m0 first.
  write("cli_m0.json", "[1, 0, 0, 0, 0]");
  write("cli_m1.json", "[0, 1, 0, 0, 0]");
  write("cli_zero.json", "[0, 0, 0, 0, 0]");
  write("cli_short.json", "[1, 0]");
  write("cli_bad.json", "[1, \"x\"]");
  CHECK(run("check-vector --space su-sphere --n 2 --vector cli_m0.json") == 0);
  const auto pass = nlohmann::json::parse(slurp("cli_out.txt"));
  CHECK(pass["test"]["verdict"] == true);
  CHECK(pass["oracle"]["verdict"] == true);
  CHECK(run("check-vector --space su-sphere --n 2 --vector cli_m1.json") == 1);
  const auto fail = nlohmann::json::parse(slurp("cli_out.txt"));
  CHECK(fail["oracle"]["max_residual"].get<double>() > 1e-7);
  CHECK(run("check-vector --space su-sphere --n 2 --vector cli_zero.json") == 2);
  CHECK(run("check-vector --space su-sphere --n 2 --vector cli_short.json") == 2);
  CHECK(run("check-vector --space su-sphere --n 2 --vector cli_bad.json") == 2);
  CHECK(run("check-vector --space su-sphere --n 2 --vector missing.json") == 2);
  CHECK(run("check-vector --space so-sphere --n 2 --vector cli_short.json") == 2);
}

TEST_CASE("verify passes with reduced sampling") {
  CHECK(run("verify --samples 20 --seed 7") == 0);
  const std::string out = slurp("cli_out.txt");
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("PASS") != std::string::npos);
}
