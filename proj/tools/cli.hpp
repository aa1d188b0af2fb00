#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "congest/engine.hpp"
#include "congest/graph.hpp"

namespace congest::cli {

enum Exit { kOk = 0, kVerifyFailed = 2, kUsage = 3, kAlgorithm = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string graph_path;
  std::string algorithm;
  std::vector<std::string> sources;
  std::optional<std::int64_t> h;
  std::string h_rule;
  std::optional<Weight> delta;
  std::optional<Weight> lambda;
  std::string epsilon = "1/2";
  std::uint64_t seed = 0;
  std::string method = "pipelined";
  std::string mode = "single";
  std::vector<std::string> seeds;  // extension: node:distance
  bool fifo = false;
  std::string report_path;  // empty: stdout
  std::string csv_path;
};

struct Outcome {
  nlohmann::json report;
  std::vector<Phase> phases;
  std::vector<std::string> csv_rows;  // "source,target,distance"
  bool verified = true;
};

// "3" or "c" (a = 0).
NodeId parse_node(const std::string& text, std::size_t n);
// "0.1", "1/10", "2".
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text);

EngineConfig engine_for(const WeightedGraph& g, bool fifo);

Outcome run_algorithm(const WeightedGraph& g, const RunOptions& options);

nlohmann::json phases_json(const std::vector<Phase>& phases);

struct BenchOptions {
  std::string algorithm = "ksp";
  std::vector<std::size_t> sizes;
  double p = 0.3;
  Weight lambda = 10;
  double zero_fraction = 0.2;
  std::uint64_t seed = 1;
  std::string out_path;
};

// One CSV line per size: algorithm,n,k,h,rounds,congestion,messages,phases
void run_bench(const BenchOptions& options, std::ostream& out);

int main_with(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace congest::cli
