#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const char* binary() {
  const char* bin = std::getenv("FOFANA_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "FOFANA_BIN must point at the CLI binary");
  return bin;
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "fofana-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with stdout+stderr captured; returns the exit status.
int run(const std::string& args, std::string* output = nullptr) {
  const fs::path cap = work_dir() / "capture.txt";
  const std::string cmd =
      "\"" + std::string(binary()) + "\" " + args + " > \"" + cap.string() + "\" 2>&1";
  const int raw = std::system(cmd.c_str());
  if (output != nullptr) *output = slurp(cap);
  if (raw == -1) return -1;
  return WEXITSTATUS(raw);
}

fs::path write_zero_input() {
  const fs::path p = work_dir() / "zero.json";
  std::ofstream out(p);
  out << R"({"lattice":{"d":1,"h":0.25,"L":1},"function":{"kind":"constant","value":0}})";
  return p;
}

}  // namespace

TEST_CASE("cli reports its version") {
  std::string out;
  CHECK(run("--version", &out) == 0);
  CHECK(out.find("fofana-kit 0.1.0") != std::string::npos);
}

TEST_CASE("cli norm of the zero function is zero") {
  const fs::path input = write_zero_input();
  std::string out;
  CHECK(run("norm --kind lebesgue --q 2 --input \"" + input.string() + "\"", &out) == 0);
  CHECK(out == "0\n");
}

TEST_CASE("cli usage and config errors exit with one") {
  const fs::path input = write_zero_input();
  CHECK(run("definitely-not-a-subcommand") == 1);
  CHECK(run("norm --kind bogus --input \"" + input.string() + "\"") == 1);
  CHECK(run("maximal") == 1);  // missing required --input
  CHECK(run("norm --kind lebesgue --input /nonexistent/f.json") == 1);
  CHECK(run("verify --suite maximal --profile smoke --q 0.5") == 1);
}

TEST_CASE("cli failed checks exit with two") {
  // Class membership fails: t^(1/2) phi(t) grows like t^0.49 across eighteen
  // decades, far past the almost-decreasing cap.
  std::string out;
  const int code = run(
      "check-phi --phi '{\"kind\":\"power\",\"alpha\":100}' --q 2 --p 2 "
      "--t-grid geometric:1e-9:1e9:64",
      &out);
  CHECK(code == 2);
  CHECK(out.find("class") != std::string::npos);

  // The same weight inside the band passes.
  CHECK(run("check-phi --phi '{\"kind\":\"power\",\"alpha\":2}'") == 0);

  // A cap below the observed constant turns a passing suite into a failure.
  CHECK(run("verify --suite maximal --profile smoke --no-refine "
            "--cap-boundedness 1.00001") == 2);
}

TEST_CASE("cli not-applicable outcomes exit with zero") {
  std::string out;
  const int code = run(
      "verify --suite maximal --profile smoke --no-refine "
      "--phi '{\"kind\":\"power\",\"alpha\":4}'",
      &out);
  CHECK(code == 0);
  CHECK(out.find("not-applicable") != std::string::npos);
}

TEST_CASE("cli verify runs are deterministic byte for byte") {
  const fs::path r1 = work_dir() / "r1.json";
  const fs::path r2 = work_dir() / "r2.json";
  const fs::path c1 = work_dir() / "c1.csv";
  const fs::path c2 = work_dir() / "c2.csv";
  const std::string common =
      "--threads 1 verify --suite all --profile smoke --no-refine --seed 11 ";
  CHECK(run(common + "--report \"" + r1.string() + "\" --csv \"" + c1.string() + "\"") == 0);
  CHECK(run(common + "--report \"" + r2.string() + "\" --csv \"" + c2.string() + "\"") == 0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(slurp(c1) == slurp(c2));
  CHECK_FALSE(slurp(c1).empty());
}

TEST_CASE("cli reports embed the resolved configuration") {
  const fs::path report = work_dir() / "verify-report.json";
  REQUIRE(run("verify --suite indicator --profile smoke --no-refine --report \"" +
              report.string() + "\"") == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  REQUIRE(j.contains("config"));
  CHECK(j["config"]["version"] == "0.1.0");
  CHECK(j["config"]["tool"] == "fofana-kit");
  CHECK(j["config"]["suite"] == "indicator");
  REQUIRE(j.contains("suites"));
  REQUIRE(j["suites"].contains("indicator"));
  CHECK(j["suites"]["indicator"]["check"] == "ball-indicator");
  CHECK(j["suites"]["indicator"]["status"] == "ok");
  CHECK(j["suites"]["indicator"]["pass"] == true);

  const fs::path input = write_zero_input();
  const fs::path norm_report = work_dir() / "norm-report.json";
  REQUIRE(run("norm --kind fofana --q 1 --p 4 --alpha 2 --radii list:0.25,0.5,1 --input \"" +
              input.string() + "\" --out \"" + norm_report.string() + "\"") == 0);
  const nlohmann::json n = nlohmann::json::parse(slurp(norm_report));
  CHECK(n["value"] == 0.0);
  CHECK(n["config"]["kind"] == "fofana");
  CHECK(n["config"]["version"] == "0.1.0");
  CHECK(n.contains("trace"));
}
