#include <doctest.h>

#include <sstream>

#include "oddcover/cli.hpp"
#include "oddcover/json_io.hpp"

using namespace oddcover;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits graph6") {
  CHECK(run({"gen", "complete", "5"}).out == "D~{\n");
  CHECK(run({"gen", "cycle", "5"}).out == "Dhc\n");
  CHECK(run({"gen", "kmn", "2", "3"}).code == 0);
  CHECK(run({"gen", "random", "10", "0.5", "3"}).out == run({"gen", "random", "10", "0.5", "3"}).out);
  CHECK(run({"gen", "path", "3", "--edge-list"}).out.find("1 2") != std::string::npos);
  CHECK(run({"gen", "bogus", "3"}).code == cli::kExitBadInput);
  CHECK(run({"gen", "complete"}).code == cli::kExitBadInput);
  CHECK(run({"gen", "random", "5", "2", "1"}).code == cli::kExitBadInput);
}

TEST_CASE("rank and bounds") {
  const Json r = Json::parse(run({"rank"}, "D~{\n").out);
  CHECK(r["r2"] == 4);
  CHECK(run({"rank", "--format", "text", "--gen", "cycle 6"}).out.find("r2: 4") != std::string::npos);
  const Json b = Json::parse(run({"bounds", "--gen", "complete 8"}).out);
  CHECK(b["lb"] == 4);
  CHECK(b["ub"] == 4);
  CHECK(b["family"] == "complete");
  CHECK(b["witness"]["bicliques"].size() == 4);
}

TEST_CASE("construct then verify") {
  const Run c = run({"construct", "bipartite"}, run({"gen", "cycle", "6"}).out);
  REQUIRE(c.code == 0);
  const Json j = Json::parse(c.out);
  CHECK(j["bicliques"].size() == 2);
  CHECK(j["construction"]["family"] == "bipartite");
  CHECK(j["construction"]["size"] == 2);
  const Run v = run({"verify", "--gen", "cycle 6"}, c.out);
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["ok"] == true);

  Json broken = j;
  broken["bicliques"].erase(broken["bicliques"].size() - 1);
  const Run bad = run({"verify", "--gen", "cycle 6"}, broken.dump());
  CHECK(bad.code == cli::kExitVerifyFailed);
  CHECK_FALSE(Json::parse(bad.out)["mismatches"].empty());
  CHECK_FALSE(bad.err.empty());

  CHECK(run({"construct", "odd-cycle", "--gen", "cycle 6"}).code == cli::kExitBadInput);
  CHECK(run({"construct", "nope", "--gen", "cycle 6"}).code == cli::kExitBadInput);
  const Json best = Json::parse(run({"construct", "auto", "--best", "--gen", "triangles 2"}).out);
  CHECK(best["bicliques"].size() <= 4);
}

TEST_CASE("solve") {
  const Run s = run({"solve"}, "G~~~~{\n");
  REQUIRE(s.code == 0);
  const Json j = Json::parse(s.out);
  CHECK(j["status"] == "exact");
  CHECK(j["b2"] == 4);
  CHECK(j["witness"]["bicliques"].size() == 4);
  for (const char* key : {"lb", "nodes", "elapsed_ms"}) CHECK(j.contains(key));
  const Run t = run({"solve", "--format", "text", "--gen", "cycle 5"});
  CHECK(t.out.find("b2: 3") != std::string::npos);
  const Run cut = run({"solve", "--gen", "complete 10", "--search-only", "--node-budget", "100"});
  CHECK(cut.code == cli::kExitBudget);
  CHECK(Json::parse(cut.out)["status"] == "budget_exhausted");
  CHECK(run({"solve", "--gen", "complete 5", "--max-k", "99"}).code == cli::kExitBadInput);
}

TEST_CASE("input errors exit 2 before any output") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == cli::kExitBadInput);
  CHECK(unknown.out.empty());
  CHECK(run({"rank"}, "garbage here\n").code == cli::kExitBadInput);
  CHECK(run({"rank", "--gen", "cycle 5", "--inline", "Dhc"}).code == cli::kExitBadInput);
  CHECK(run({"rank", "--graph", "/nonexistent/file"}).code == cli::kExitBadInput);
  CHECK(run({"verify"}, "Dhc").code == cli::kExitBadInput);
  CHECK(run({"verify", "--gen", "cycle 5"}, "{not json").code == cli::kExitBadInput);
  CHECK(run({"verify", "--gen", "cycle 5"}, R"({"n":4,"bicliques":[]})").code == cli::kExitBadInput);
  CHECK(run({"--help"}).code == 0);
}
