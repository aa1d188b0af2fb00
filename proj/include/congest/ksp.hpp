#pragma once

#include <optional>
#include <span>
#include <vector>

#include "congest/blocker.hpp"
#include "congest/csssp.hpp"
#include "congest/engine.hpp"
#include "congest/graph.hpp"

namespace congest {

enum class HRule { kExplicit, kTheorem2, kTheorem3 };

HRule parse_h_rule(const std::string& name);
std::string to_string(HRule rule);

// kTheorem3: n^{4/3} log^{2/3} n / (2 k delta)^{1/3}
// kTheorem2: n log^{1/2} n / (lambda k)^{1/4}
// Logs are base 2. The ceiling is clamped to [1, n - 1]; kExplicit returns
// explicit_h unchanged.
std::int64_t choose_h(std::size_t n, std::size_t k, Weight delta_cap, Weight lambda,
                      HRule rule, std::int64_t explicit_h = 1);

struct KspConfig {
  std::vector<NodeId> sources;
  HRule h_rule = HRule::kTheorem3;
  std::int64_t h = 1;                 // used by kExplicit
  std::optional<Weight> delta_cap;    // default n * lambda
  std::optional<Weight> lambda;       // default: largest edge weight
  CsSspMethod csssp = CsSspMethod::kPipelined;
  EngineConfig engine;
};

struct KspResult {
  std::vector<NodeId> sources;              // sorted
  std::vector<std::vector<Distance>> rows;  // rows[i][v] = dist(sources[i], v)
  std::vector<NodeId> blockers;
  std::int64_t h = 1;
  Weight delta_cap = 0;
  Weight delta_observed = 0;  // largest finite distance in the output
  std::vector<Phase> phases;

  const std::vector<Distance>& row(NodeId x) const;
  RoundMetrics total() const { return total_of(phases); }
};

struct Relay {
  NodeId center = 0;
  NodeId source = 0;
  Distance to_center;    // h-hop distance source -> center
  Distance from_center;  // distance center -> v
};

// Node v's final step: min of its own h-hop value and every relay through a
// blocker. own[i] belongs to sources[i].
std::vector<Distance> local_combine(const std::vector<NodeId>& sources,
                                    const std::vector<Distance>& own,
                                    std::span<const Relay> relays);

// CSSSP, blocker set, Bellman-Ford from each blocker in turn, broadcast of
// (c, x, dist(x, c)), local combine. Nonnegative weights only.
KspResult run_ksp(const WeightedGraph& g, KspConfig config);

}  // namespace congest
