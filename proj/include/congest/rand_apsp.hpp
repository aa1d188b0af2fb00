#pragma once

#include <optional>
#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"

namespace congest {

struct CenterSet {
  std::vector<NodeId> centers;  // sorted
  std::int64_t q = 0;
  std::uint64_t seed = 0;
};

// q = ceil(n^{1/3} k^{1/3} ln n) clamped to [1, n]; q distinct nodes drawn
// uniformly.
std::int64_t center_count(std::size_t n, std::size_t k);
CenterSet sample_centers(std::size_t n, std::size_t k, std::uint64_t seed);

// ceil(n^{2/3} / k^{1/3}) clamped to [1, max(1, n - 1)].
std::int64_t center_hop_bound(std::size_t n, std::size_t k);

struct RandApspConfig {
  std::vector<NodeId> sources;
  std::uint64_t seed = 0;
  std::optional<std::vector<NodeId>> centers;  // replaces the sample
  std::optional<std::int64_t> h;               // replaces center_hop_bound
  EngineConfig engine;
};

struct RandApspResult {
  std::vector<NodeId> sources;
  std::vector<std::vector<Distance>> rows;
  CenterSet centers;
  std::int64_t h = 1;
  std::vector<Phase> phases;

  const std::vector<Distance>& row(NodeId x) const;
  RoundMetrics total() const { return total_of(phases); }
};

// Bellman-Ford for h hops from sources and centers, center-to-center
// broadcast and local closure, broadcast of source-to-center values, local
// combine. Throws NegativeCycle when any estimate of a closed walk is
// negative.
RandApspResult run_randomized_apsp(const WeightedGraph& g, RandApspConfig config);

}  // namespace congest
