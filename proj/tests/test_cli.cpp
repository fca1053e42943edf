#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "veccomp/cli.hpp"

using namespace veccomp::cli;
using nlohmann::ordered_json;

#ifndef VECCOMP_FIXTURE_DIR
#define VECCOMP_FIXTURE_DIR "fixtures"
#endif

namespace {

const std::string kFixtures = VECCOMP_FIXTURE_DIR;

ordered_json parse_out(const DispatchResult& r) {
  return ordered_json::parse(r.out);
}

}  // namespace

TEST_CASE("count subcommand") {
  auto r = dispatch({"count", "--k", "15", "--target", "10,10", "--weights",
                     kFixtures + "/delannoy.json"});
  REQUIRE(r.exit_code == 0);
  auto j = parse_out(r);
  CHECK(j["value"] == "756756");
  CHECK(j["params"]["k"] == 15);
  CHECK(j["params"]["target"] == ordered_json({10, 10}));

  auto zero = dispatch({"count", "--k", "0", "--target", "0,0", "--weights",
                        kFixtures + "/intro.json"});
  CHECK(parse_out(zero)["value"] == "1");

  auto modded = dispatch({"count", "--k", "6", "--target", "3,6", "--weights",
                          kFixtures + "/ex170.json", "--mod", "9"});
  CHECK(parse_out(modded)["value"] == "8");
}

TEST_CASE("cf and sequence subcommands") {
  auto r = dispatch({"cf", "--target", "1,2", "--weights", kFixtures + "/intro.json"});
  CHECK(parse_out(r)["value"] == "7");

  auto seq = dispatch({"sequence", "--family", "scolor", "--max", "5"});
  REQUIRE(seq.exit_code == 0);
  CHECK(parse_out(seq) == ordered_json({"1", "5", "26", "153", "931"}));

  auto del = dispatch({"sequence", "--family", "delannoy", "--max", "3"});
  CHECK(parse_out(del) == ordered_json({"1", "3", "13", "63"}));

  auto whit = dispatch({"sequence", "--family", "whitney", "--max", "5"});
  CHECK(parse_out(whit) == ordered_json({"1", "1", "2", "5", "11", "26"}));
}

TEST_CASE("enumerate emits JSON lines in stream order") {
  auto r = dispatch({"enumerate", "--target", "1,2", "--weights",
                     kFixtures + "/intro.json"});
  REQUIRE(r.exit_code == 0);
  std::vector<ordered_json> lines;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(ordered_json::parse(line));
  REQUIRE(lines.size() == 7);
  CHECK(lines[0]["parts"] == ordered_json({{0, 1}, {0, 1}, {1, 0}}));
  CHECK(lines[0]["colors"] == ordered_json({1, 1, 1}));
  CHECK(lines[3]["colors"] == ordered_json({1, 2}));

  auto limited = dispatch({"enumerate", "--target", "1,2", "--weights",
                           kFixtures + "/intro.json", "--limit", "2"});
  std::stringstream ss2(limited.out);
  int n = 0;
  while (std::getline(ss2, line))
    if (!line.empty()) ++n;
  CHECK(n == 2);

  auto fixed_parts = dispatch({"enumerate", "--target", "1,2", "--weights",
                               kFixtures + "/intro.json", "--k", "3"});
  std::stringstream ss3(fixed_parts.out);
  n = 0;
  while (std::getline(ss3, line))
    if (!line.empty()) ++n;
  CHECK(n == 3);
}

TEST_CASE("help exits zero") {
  auto r = dispatch({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count") != std::string::npos);
}

TEST_CASE("check subcommand exits 1 on violated congruences") {
  auto ok = dispatch({"check", "--theorem", "lucas", "--params",
                      R"({"k":5,"p":3,"target":[3,6]})", "--weights",
                      kFixtures + "/ex170.json"});
  REQUIRE(ok.exit_code == 0);
  auto j = parse_out(ok);
  CHECK(j["holds"] == true);
  CHECK(j["predicted"] == 2);
  CHECK(j["actual"] == 2);

  auto report = dispatch({"check", "--theorem", "divisibility", "--params",
                          R"({"k":12,"target":[9,8]})", "--weights",
                          kFixtures + "/divis.json"});
  CHECK(report.exit_code == 0);
  CHECK(parse_out(report)["modulus"] == 12);
}

TEST_CASE("prime-criterion subcommand") {
  auto r = dispatch({"prime-criterion", "--q", "55", "--dim", "2"});
  REQUIRE(r.exit_code == 0);
  auto j = parse_out(r);
  CHECK(j["verdict"] == "composite");
  auto witnesses = j["witnesses"].get<std::vector<long>>();
  CHECK(std::find(witnesses.begin(), witnesses.end(), 20) != witnesses.end());
  CHECK(std::find(witnesses.begin(), witnesses.end(), 22) != witnesses.end());
  CHECK(std::find(witnesses.begin(), witnesses.end(), 25) == witnesses.end());

  auto p = dispatch({"prime-criterion", "--q", "13", "--dim", "2"});
  CHECK(parse_out(p)["verdict"] == "prime-consistent");
}

TEST_CASE("approx subcommand") {
  auto r = dispatch({"approx", "--method", "clt", "--params",
                     R"({"k":15,"target":[10,10],"steps":[[0,1],[1,0],[1,1]]})"});
  REQUIRE(r.exit_code == 0);
  auto j = parse_out(r);
  CHECK(j["exact"] == "756756");
  CHECK(j["approx"].get<double>() == doctest::Approx(791096.70).epsilon(1e-4));
  CHECK(j["rel_err"].get<double>() < 0.05);

  auto d = dispatch({"approx", "--method", "delannoy", "--params", R"({"l":10})"});
  CHECK(parse_out(d)["rel_err"].get<double>() < 0.02);
}

TEST_CASE("faa subcommand") {
  auto r = dispatch({"faa", "--target", "1,2"});
  REQUIRE(r.exit_code == 0);
  auto j = parse_out(r);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0]["coeff"] == "1");
  CHECK(j[1]["coeff"] == "2");
  CHECK(j[1]["g_order"] == 2);
  CHECK(j[3]["factors"][0]["part"] == ordered_json({0, 1}));
  CHECK(j[3]["factors"][0]["mult"] == 2);
}

TEST_CASE("validation errors exit 2 with a machine-readable object") {
  auto unknown = dispatch({"frobnicate"});
  CHECK(unknown.exit_code == 2);

  auto bad_weights = dispatch({"count", "--k", "2", "--target", "1,2", "--weights",
                               "/nonexistent.json"});
  CHECK(bad_weights.exit_code == 2);
  CHECK(parse_out(bad_weights)["error"]["code"] == "bad-weights");

  auto capped = dispatch({"cf", "--target", "4000,4000", "--weights",
                          kFixtures + "/delannoy.json"});
  CHECK(capped.exit_code == 2);
  CHECK(parse_out(capped)["error"]["code"] == "cap-exceeded");

  auto divergent = dispatch({"cf", "--target", "2,2", "--weights",
                             kFixtures + "/divis.json"});
  CHECK(divergent.exit_code == 2);

  // the environment variable tightens the cell cap
  setenv("VECCOMP_MAX_CELLS", "10", 1);
  auto tiny_cap = dispatch({"count", "--k", "2", "--target", "5,5", "--weights",
                            kFixtures + "/delannoy.json"});
  unsetenv("VECCOMP_MAX_CELLS");
  CHECK(tiny_cap.exit_code == 2);
  CHECK(parse_out(tiny_cap)["error"]["code"] == "cap-exceeded");
}

TEST_CASE("output is byte-for-byte deterministic") {
  std::vector<std::string> args = {"count", "--k", "6", "--target", "3,6",
                                   "--weights", kFixtures + "/ex170.json"};
  auto first = dispatch(args);
  auto second = dispatch(args);
  CHECK(first.out == second.out);

  auto seq1 = dispatch({"faa", "--target", "2,2"});
  auto seq2 = dispatch({"faa", "--target", "2,2"});
  CHECK(seq1.out == seq2.out);
}

TEST_CASE("batch fixture runs") {
  auto all = dispatch({"batch", kFixtures + "/worked_examples.json"});
  auto j = parse_out(all);
  INFO(all.out);
  CHECK(all.exit_code == 0);
  CHECK(j["failed"] == 0);
  CHECK(j["total"] == j["passed"]);
  // output order follows fixture order
  CHECK(j["checks"][0]["name"] == "delannoy-steps-15-parts");

  // empty fixture passes with zero checks
  std::string empty_path = "/tmp/veccomp_empty_fixture.json";
  {
    std::ofstream out(empty_path);
    out << "[]\n";
  }
  auto empty = dispatch({"batch", empty_path});
  CHECK(empty.exit_code == 0);
  CHECK(parse_out(empty)["total"] == 0);

  // a deliberately wrong expectation flags that check and exits 1
  std::string bad_path = "/tmp/veccomp_bad_fixture.json";
  {
    std::ofstream out(bad_path);
    out << R"([{"name":"wrong","subcommand":"count",
                "params":{"k":2,"target":[1,2],"weights":")"
        << kFixtures << R"(/intro.json"},
                "expect":{"value":"5"}}])";
  }
  auto bad = dispatch({"batch", bad_path});
  CHECK(bad.exit_code == 1);
  auto bj = parse_out(bad);
  CHECK(bj["failed"] == 1);
  CHECK(bj["checks"][0]["status"] == "fail");
  CHECK(bj["checks"][0]["mismatches"][0]["got"] == "4");
}
