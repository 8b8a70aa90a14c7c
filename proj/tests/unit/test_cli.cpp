#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "jc/cli.hpp"
#include "jc/qexact.hpp"

using namespace jc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const RunConfig& c) {
  std::ostringstream out, err;
  int code = run_command(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig table_of(std::vector<int> lambda, std::string format = "md") {
  RunConfig c;
  c.command = "table";
  c.lambda = std::move(lambda);
  c.format = std::move(format);
  return c;
}

}  // namespace

TEST_CASE("table for a single block has one row") {
  Run r = run(table_of({3}, "json"));
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["mu"] == nlohmann::json::array({1, 1, 1}));
  CHECK(IntLaurent::from_json(j["rows"][0]["poly"]) == IntLaurent(1));
}

TEST_CASE("table output is deterministic in every format") {
  for (const char* f : {"md", "json", "csv"}) {
    RunConfig c = table_of({2, 2, 2, 2}, f);
    Run a = run(c), b = run(c);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
  RunConfig h;
  h.command = "table";
  h.h = std::vector<int>{1, 3, 5, 6, 7, 7, 7};
  Run r = run(h);
  CHECK(r.code == kExitOk);
  // header, blank line, column names, rule, fifteen rows
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4 + 15);
}

TEST_CASE("json rows round-trip") {
  Run r = run(table_of({2, 1, 1}, "json"));
  auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["rows"]) {
    IntLaurent poly = IntLaurent::from_json(row["poly"]);
    IntLaurent rebuilt = IntLaurent::from_json(row["factors"]["residual"]).shifted(row["factors"]["q_pow"].get<int>()) *
                         q_minus_one_pow(row["factors"]["qm1_pow"].get<int>());
    CHECK(poly == rebuilt);
  }
}

TEST_CASE("usage errors exit with 2") {
  RunConfig c = table_of({3});
  c.primes = {4};
  CHECK(run(c).code == kExitUsage);
  RunConfig bad_h;
  bad_h.command = "table";
  bad_h.h = std::vector<int>{2, 1};
  CHECK(run(bad_h).code == kExitUsage);
  RunConfig none;
  none.command = "table";
  CHECK(run(none).code == kExitUsage);
  RunConfig suite;
  suite.command = "verify";
  suite.suite = "nope";
  CHECK(run(suite).code == kExitUsage);
  RunConfig cmd;
  cmd.command = "plot";
  CHECK(run(cmd).code == kExitUsage);
  RunConfig threads = table_of({3});
  threads.threads = 0;
  CHECK(run(threads).code == kExitUsage);
}

TEST_CASE("brute tallies and cosets") {
  RunConfig c;
  c.command = "brute";
  c.h = std::vector<int>{1, 2, 3};
  Run r = run(c);
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tally"] == nlohmann::json{{"(1,1,1)", 1}, {"(2,1)", 5}, {"(3)", 2}});

  c.h = std::vector<int>{3, 3, 3};
  c.p = 5;
  j = nlohmann::json::parse(run(c).out);
  CHECK(j["tally"] == nlohmann::json{{"(1,1,1)", 1}});

  RunConfig k;
  k.command = "brute";
  k.cosets = true;
  k.n = 2;
  k.h1 = std::vector<int>{1, 2};
  k.h2 = std::vector<int>{1, 2};
  r = run(k);
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["count"] == 2);
}

TEST_CASE("budget refusal exits with 3") {
  RunConfig c;
  c.command = "brute";
  c.h = std::vector<int>{1, 2, 3, 4, 5, 6};
  c.p = 3;
  Run r = run(c);
  CHECK(r.code == kExitBudget);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("verify suites pass and report") {
  RunConfig c;
  c.command = "verify";
  c.suite = "modular";
  c.n = 5;
  c.format = "json";
  c.threads = 3;
  Run r = run(c);
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["modular"]["checks"].get<int>() > 0);
  CHECK(j["modular"]["failures"].empty());

  RunConfig h;
  h.command = "verify";
  h.suite = "hermite";
  h.lambda = std::vector<int>{2, 2};
  CHECK(run(h).code == kExitOk);

  RunConfig b;
  b.command = "verify";
  b.suite = "bruteforce";
  b.n = 3;
  b.primes = {2, 3};
  CHECK(run(b).code == kExitOk);
}

TEST_CASE("config merging and output files") {
  RunConfig c;
  c.merge_json(nlohmann::json{{"command", "table"}, {"lambda", {2, 1}}, {"format", "csv"}});
  CHECK(c.command == "table");
  CHECK(c.lambda == std::vector<int>{2, 1});
  c.format = "md";  // flags applied after the file win
  const std::string path = "cli_test_output.md";
  c.out = path;
  Run r = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream got;
  got << in.rdbuf();
  CHECK(got.str().rfind("### ", 0) == 0);
  std::remove(path.c_str());
}
