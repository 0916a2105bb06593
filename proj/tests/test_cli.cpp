#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "krc/classical.hpp"
#include "krc/io.hpp"
#include "krc/promotion.hpp"

using namespace krc;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) cmd += "printf '%s' '" + stdin_data + "' | ";
  cmd += std::string(KRC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) res.output.append(buffer, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

const std::string kGolden = R"({"n":5,"m":3,"i":3,"rows":[[1,1,1],[2,0,0],[0,0,0]]})";

}  // namespace

TEST_CASE("dim reports both counts") {
  const auto res = run("dim --n 2 --m 3 --i 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "10 10 OK\n");
}

TEST_CASE("promote matches the library") {
  const auto res = run("promote -", kGolden);
  REQUIRE(res.exit_code == 0);
  const auto image = pattern_from_json(nlohmann::json::parse(res.output));
  const Pattern input = pattern_from_json(nlohmann::json::parse(kGolden));
  CHECK(image == promote(input).image);
  CHECK(image.grid() == Grid{{0, 1, 1}, {1, 2, 0}, {2, 0, 0}});
}

TEST_CASE("promote trace lines") {
  const auto res = run("promote --trace --format text -", kGolden);
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("l^2: 3<4<5") != std::string::npos);
  CHECK(res.output.find("l^1: 3<4<5") != std::string::npos);
  CHECK(res.output.find("0 1 1/1 2 0/2 0 0") != std::string::npos);
}

TEST_CASE("apply lowers the highest weight at node i") {
  const std::string zero = R"({"n":4,"m":5,"i":2,"rows":[[0,0],[0,0],[0,0]]})";
  const auto res = run("apply --op f2 -", zero);
  REQUIRE(res.exit_code == 0);
  const auto image = pattern_from_json(nlohmann::json::parse(res.output));
  CHECK(image.grid() == Grid{{0, 1}, {0, 0}, {0, 0}});

  const auto none = run("apply --op e1 -", zero);
  CHECK(none.exit_code == 0);
  CHECK(none.output == "none\n");

  const auto affine = run("apply --op e0 -", zero);
  REQUIRE(affine.exit_code == 0);
  const Pattern input = pattern_from_json(nlohmann::json::parse(zero));
  CHECK(pattern_from_json(nlohmann::json::parse(affine.output)) == *e0(input));
}

TEST_CASE("enumerate agrees with the library") {
  const auto res = run("enumerate --n 2 --m 1 --i 2");
  REQUIRE(res.exit_code == 0);
  const auto list = nlohmann::json::parse(res.output);
  REQUIRE(list.size() == 3);
  const auto members = enumerate_patterns(CrystalShape(2, 1, 2));
  for (std::size_t k = 0; k < members.size(); ++k)
    CHECK(pattern_from_json(list[k]) == members[k]);

  const auto text = run("enumerate --n 2 --m 1 --i 2 --format text");
  CHECK(text.output == "0 0\n0 1\n1 0\n");
}

TEST_CASE("verification suites succeed end to end") {
  CHECK(run("verify promotion --n 2 --m 3 --i 2").exit_code == 0);
  CHECK(run("verify axioms --n 2 --m 3 --i 2").exit_code == 0);
  CHECK(run("verify stembridge --n 3 --m 1 --i 2").exit_code == 0);
  CHECK(run("verify oracle --n 2 --m 2 --i 1").exit_code == 0);
}

TEST_CASE("dot export is byte-stable and marks affine arrows") {
  const auto first = run("graph --n 2 --m 1 --i 1 --format dot --affine");
  const auto second = run("graph --n 2 --m 1 --i 1 --format dot --affine");
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("style=dashed") != std::string::npos);
  CHECK(first.output.find("digraph") != std::string::npos);

  const auto classical = run("graph --n 2 --m 1 --i 1 --format dot");
  CHECK(classical.output.find("style=dashed") == std::string::npos);
}

TEST_CASE("graph json lists vertices in discovery order") {
  const auto res = run("graph --n 2 --m 3 --i 2");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j.at("vertices").size() == 10);
  CHECK(pattern_from_json(j.at("vertices")[0]).is_zero());
  CHECK(j.at("edges").size() > 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("dim --n 2 --m 3 --i 5").exit_code == 2);
  CHECK(run("dim --n 2 --m -1 --i 1").exit_code == 2);
  CHECK(run("promote -", "not json").exit_code == 2);
  CHECK(run("promote -", R"({"n":5,"m":5,"i":3,"rows":[[1,0,0],[0,1,3],[1,0,1]]})").exit_code ==
        2);
  CHECK(run("apply --op q3 -", kGolden).exit_code == 2);
  CHECK(run("verify nonsense --n 2 --m 1 --i 1").exit_code == 2);
  CHECK(run("promote --n 5 --m 3 --i 2 -", kGolden).exit_code == 2);
}
