#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace congest;
using namespace congest::cli;
namespace fs = std::filesystem;

namespace {

struct Call {
  int code = 0;
  std::string out;
  std::string err;
};

Call call(std::vector<std::string> args) {
  args.insert(args.begin(), "congest");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Call c;
  c.code = main_with(static_cast<int>(argv.size()), argv.data(), out, err);
  c.out = out.str();
  c.err = err.str();
  return c;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "congest_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kFig1 = FIXTURE_DIR "/fig1.graph";

}  // namespace

TEST_CASE("argument helpers") {
  CHECK(parse_node("c", 4) == 2);
  CHECK(parse_node("3", 4) == 3);
  CHECK_THROWS_AS(parse_node("4", 4), UsageError);
  CHECK_THROWS_AS(parse_node("x1", 4), UsageError);
  CHECK(parse_fraction("0.01") == std::pair<std::int64_t, std::int64_t>{1, 100});
  CHECK(parse_fraction("1/10") == std::pair<std::int64_t, std::int64_t>{1, 10});
  CHECK(parse_fraction("2") == std::pair<std::int64_t, std::int64_t>{2, 1});
  CHECK(parse_fraction("-0.5") == std::pair<std::int64_t, std::int64_t>{-5, 10});
  CHECK_THROWS_AS(parse_fraction("abc"), UsageError);
}

TEST_CASE("generate") {
  Call path = call({"generate", "--kind", "path", "--n", "4", "--w", "1"});
  CHECK(path.code == 0);
  WeightedGraph g = parse_graph(path.out);
  CHECK(g.n() == 4);
  CHECK(g.edges().size() == 3);

  std::vector<std::string> gnp = {"generate", "--kind", "gnp", "--n", "40", "--p", "0.3",
                                  "--lambda", "10", "--zero-frac", "0.2", "--seed", "7"};
  Call a = call(gnp), b = call(gnp);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(call({"generate", "--kind", "gnp", "--n", "10", "--p", "1.5"}).code == kUsage);
  CHECK(call({"generate", "--kind", "torus", "--n", "10"}).code == kUsage);
  CHECK(call({"generate"}).code == kUsage);
}

TEST_CASE("run ksp on fig1") {
  const fs::path report = scratch("ksp.json"), csv = scratch("ksp.csv");
  Call c = call({"run", kFig1, "ksp", "--sources", "a,b", "--h", "2", "--report", report.string(),
                 "--csv", csv.string()});
  CHECK(c.code == 0);
  auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["schema_version"] == 1);
  CHECK(j["verdict"] == "exact");
  CHECK(j["config"]["h"] == 2);
  CHECK(j["result"]["blockers"] == nlohmann::json::array({1}));
  CHECK(j["total"]["rounds"].get<std::int64_t>() > 0);
  CHECK(slurp(csv) ==
        "source,target,distance\n0,0,0\n0,1,1\n0,2,3\n0,3,2\n1,1,0\n1,2,2\n1,3,1\n");
}

TEST_CASE("run blocker on fig1") {
  Call c = call({"run", kFig1, "blocker", "--h", "2"});
  CHECK(c.code == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["result"]["blockers"] == nlohmann::json::array({1}));
  CHECK(j["verdict"] == "exact");
}

TEST_CASE("every algorithm verifies on a small graph") {
  const fs::path graph = scratch("small.graph");
  REQUIRE(call({"generate", "--n", "20", "--p", "0.2", "--lambda", "6", "--zero-frac", "0.2",
                "--seed", "3", "--out", graph.string()})
              .code == 0);
  const std::vector<std::vector<std::string>> runs = {
      {"short-range", "--source", "0", "--h", "4"},
      {"short-range", "--source", "0", "--h", "4", "--mode", "frontier"},
      {"extension", "--source", "0", "--h", "3", "--seeds", "5:2,9:1", "--mode", "frontier"},
      {"multi-source", "--sources", "0,4,8", "--h", "4"},
      {"csssp", "--sources", "0,4,8", "--h", "3", "--method", "bf"},
      {"blocker", "--h", "3"},
      {"ksp", "--sources", "1,2,3"},
      {"apsp", "--h-rule", "theorem2"},
      {"rand-apsp", "--seed", "5"},
      {"approx", "--epsilon", "0.5"},
  };
  for (const auto& extra : runs) {
    std::vector<std::string> args = {"run", graph.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    Call c = call(args);
    CAPTURE(extra.front());
    CHECK(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["verdict"] != "FAIL");
    CHECK(j["phases"].size() > 0);
  }
}

TEST_CASE("errors and exit codes") {
  const fs::path graph = scratch("forty.graph");
  REQUIRE(call({"generate", "--n", "40", "--p", "0.1", "--lambda", "5", "--zero-frac", "0.2",
                "--out", graph.string()})
              .code == 0);
  Call eps = call({"run", graph.string(), "approx", "--epsilon", "0.01"});
  CHECK(eps.code == kAlgorithm);
  CHECK(eps.err.find("epsilon") != std::string::npos);

  CHECK(call({"run", graph.string(), "dijkstra"}).code == kUsage);
  CHECK(call({"run", graph.string(), "csssp"}).code == kUsage);
  CHECK(call({"run", "/nonexistent.graph", "ksp"}).code == kUsage);

  const fs::path cycle = scratch("cycle.graph");
  std::ofstream(cycle) << "p 3 3 1 arb\ne 0 1 1\ne 1 2 1\ne 2 0 -3\n";
  CHECK(call({"run", cycle.string(), "rand-apsp"}).code == kAlgorithm);

  ::setenv("CONGEST_ROUND_LIMIT", "1", 1);
  Call limited = call({"run", graph.string(), "ksp"});
  ::unsetenv("CONGEST_ROUND_LIMIT");
  CHECK(limited.code == kAlgorithm);
}

TEST_CASE("bench") {
  Call empty = call({"bench", "--algorithm", "ksp"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "algorithm,n,k,h,rounds,congestion,messages,verdict,phases\n");
  CHECK(call({"bench", "--algorithm", "nope", "--n", "10"}).code == kUsage);

  Call sweep = call({"bench", "--algorithm", "ksp", "--n", "20,40,80", "--seed", "1"});
  CHECK(sweep.code == 0);
  std::istringstream lines(sweep.out);
  std::string line;
  std::getline(lines, line);
  std::int64_t last = -1;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 9);
    CHECK(cells[7] == "exact");
    const std::int64_t rounds = std::stoll(cells[4]);
    CHECK(rounds >= last);
    last = rounds;
    ++rows;
  }
  CHECK(rows == 3);
}
