// Drives the installed command line tool as a subprocess.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(SPLITAUTH_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("splitauth_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("gen-family, develop and verify") {
  const Run family = run("gen-family --c 2 --n 2");
  REQUIRE(family.status == 0);
  CHECK(family.out.find("\"base_blocks\"") != std::string::npos);
  const std::string family_path = temp_file("family.json", family.out);

  const Run verify = run("verify " + family_path);
  CHECK(verify.status == 0);
  CHECK(verify.out.find("2-(17,34,4=2×2,1), λ=1") != std::string::npos);
  CHECK(verify.out.find("orbits: 17 17 (all full)") != std::string::npos);

  const std::string design_path = temp_file("design.json", "");
  CHECK(run("develop " + family_path + " -o " + design_path).status == 0);
  CHECK(read_file(design_path).find("\"blocks\"") != std::string::npos);

  const Run json = run("verify " + design_path + " --json");
  CHECK(json.status == 0);
  CHECK(json.out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("gen-family --c 0 --n 1").status == 2);
  CHECK(run("verify /nonexistent/path.json").status == 2);
  CHECK(run("verify " + temp_file("broken.json", "{ nope")).status == 2);
  CHECK(run("demo table3").status == 2);

  const std::string bad = temp_file(
      "bad_design.json", R"({"v":9,"t":2,"blocks":[[[1,2],[3,5]],[[2,3],[4,6]]]})");
  CHECK(run("verify " + bad).status == 1);
  CHECK(run("to-code " + bad).status == 1);
}

TEST_CASE("analyze names the violated claim") {
  const std::string mutated = temp_file("mutated_code.json", R"({"u":2,"v":9,"rules":[
    [[1,2],[3,7]],[[2,3],[4,6]],[[3,4],[5,7]],[[4,5],[6,8]],[[5,6],[7,9]],
    [[6,7],[8,1]],[[7,8],[9,2]],[[8,9],[1,3]],[[9,1],[2,4]]]})");
  const std::string command = std::string(SPLITAUTH_CLI) + " analyze " + mutated + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 1);
  CHECK(out.find("violated:") != std::string::npos);
  CHECK(out.find("lambda-uniformity") != std::string::npos);

  const std::string family_path = temp_file("family21.json", run("gen-family --c 2 --n 1").out);
  const Run good = run("analyze " + family_path);
  CHECK(good.status == 0);
  CHECK(good.out.find("P_d0 = 4/9") != std::string::npos);
  CHECK(good.out.find("verdict: all claims hold") != std::string::npos);
}

TEST_CASE("to-code and export") {
  const std::string family_path = temp_file("family21b.json", run("gen-family --c 2 --n 1").out);
  const Run code = run("to-code " + family_path);
  REQUIRE(code.status == 0);
  CHECK(code.out.find("\"rules\"") != std::string::npos);
  const std::string code_path = temp_file("code21.json", code.out);

  const Run csv = run("export " + code_path + " --format csv");
  CHECK(csv.status == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 10);  // header + 9 rows
  CHECK(csv.out.rfind("rule,s1,s2\n", 0) == 0);

  const Run markdown = run("export " + code_path + " --format markdown");
  CHECK(markdown.out.find("| e₆ | {6,7} | {8,1} |") != std::string::npos);

  const Run text = run("export " + code_path + " --format text");
  CHECK(text.out.find("e₉ {9,1} {2,4}\n") != std::string::npos);
  CHECK(run("export " + code_path + " --format xml").status == 2);
}

TEST_CASE("stdin input") {
  const std::string family = run("gen-family --c 1 --n 1").out;
  const std::string path = temp_file("family11.json", family);
  const Run result = run("verify - < " + path);
  CHECK(result.status == 0);
  CHECK(result.out.find("2-(3,3,2=1×2,1)") != std::string::npos);
}
