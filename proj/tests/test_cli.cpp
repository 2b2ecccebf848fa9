#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "ispec/igraph.hpp"
#include "ispec/serialize.hpp"

#ifndef ISPEC_CLI_PATH
#error "ISPEC_CLI_PATH must point at the ispec binary"
#endif

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ISPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("spectrum command") {
  auto r = run("spectrum 5 1 2 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["points"].size() == 10);
  REQUIRE(j["groups"].size() == 3);
  CHECK(j["groups"][0]["multiplicity"] == 1);
  CHECK(j["groups"][1]["multiplicity"] == 5);
  CHECK(j["groups"][2]["multiplicity"] == 4);
  CHECK(j["groups"][2]["value"].get<double>() == doctest::Approx(-2.0));

  r = run("spectrum 12 3 4 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 25);

  CHECK(run("spectrum 12 6 4").exit_code == 1);
  CHECK(run("spectrum 12 3").exit_code == 1);
  CHECK(run("spectrum 12 3 4 --format xml").exit_code == 1);
}

TEST_CASE("output is deterministic") {
  CHECK(run("spectrum 17 3 5").out == run("spectrum 17 3 5").out);
  CHECK(run("sweep --n-max 14 --jobs 3").out == run("sweep --n-max 14 --jobs 1").out);
}

TEST_CASE("structure command") {
  auto j = json::parse(run("structure 12 2 2").out);
  CHECK(j["connected"] == false);
  CHECK(j["bipartite"] == true);
  j = json::parse(run("structure 5 1 2").out);
  CHECK(j["connected"] == true);
  CHECK(j["bipartite"] == false);
  j = json::parse(run("structure 8 1 3").out);
  CHECK(j["bipartite"] == true);
  CHECK(j["bipartite_parity"] == true);
}

TEST_CASE("nullity command") {
  auto j = json::parse(run("nullity 30 2 4").out);
  CHECK(j["mode"] == "certificate");
  CHECK(j["eta"] == 4);
  j = json::parse(run("nullity 30 7 14").out);
  CHECK(j["eta"] == 6);
  j = json::parse(run("nullity 5 1 2").out);
  CHECK(j["mode"] == "certificate");
  CHECK(j["eta"] == 0);
  CHECK_FALSE(j.contains("note"));
  j = json::parse(run("nullity 12 3 4").out);
  CHECK(j["mode"] == "numeric");
  CHECK(j.contains("note"));
}

TEST_CASE("verify command") {
  auto r = run("verify --n-max 12");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
  CHECK(run("verify --n-min 3 --n-max 3").exit_code == 0);
  CHECK(run("verify --n-max 8 --inject-fault 0.001").exit_code == 2);
  CHECK(run("verify --n-min 2 --n-max 8").exit_code == 1);
}

TEST_CASE("sweep command") {
  const auto r = run("sweep --n-min 3 --n-max 10");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("n,j,k,gcd,connected,bipartite,eta,lambda_min,lambda_max\n", 0) == 0);
  const auto j = json::parse(run("sweep --n-max 10 --k-eq-2j --format json").out);
  for (const auto& row : j) CHECK(row["k"].get<int>() == 2 * row["j"].get<int>());
}

TEST_CASE("export command") {
  auto r = run("export 12 3 4 --dot");
  REQUIRE(r.exit_code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), ';') == 60);
  CHECK(run("export 12 3 4").out == r.out);

  r = run("export 5 1 2 --matrix");
  REQUIRE(r.exit_code == 0);
  CHECK(ispec::parse_matrix_text(r.out) == ispec::build_adjacency(ispec::validate_and_canonicalize(5, 1, 2)));
  CHECK(run("export 5 1 2 --matrix --dot").exit_code == 1);
}
