#pragma once

#include <array>
#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"

namespace congest {

// BFS forest of the communication graph: one tree per connected component,
// rooted at the component's smallest ID.
struct SpanningForest {
  std::vector<std::optional<NodeId>> parent;
  std::vector<std::vector<NodeId>> children;
  std::vector<NodeId> root;
  std::vector<std::int64_t> depth;

  std::int64_t height() const;
  std::vector<NodeId> roots() const;
};

struct ForestRun {
  SpanningForest forest;
  std::vector<Phase> phases;
};

// Min-ID flooding of (root, distance) labels, then one round in which every
// node tells its parent.
ForestRun build_bfs_forest(const WeightedGraph& g, const EngineConfig& config = {});

struct MaxCandidate {
  std::int64_t value = 0;
  NodeId id = 0;
};

struct MaxRun {
  // Per node: the largest (value, then smallest id) in its component.
  std::vector<MaxCandidate> winner;
  RoundMetrics metrics;
};

// Convergecast of the per-node candidates to each root, then broadcast of the
// winner back down.
MaxRun component_max(const WeightedGraph& g, const SpanningForest& forest,
                     const std::vector<std::int64_t>& values,
                     const EngineConfig& config = {});

using Item = std::array<std::int64_t, 3>;

struct BroadcastRun {
  // Per node: every item that originated in its component, sorted.
  std::vector<std::vector<Item>> known;
  RoundMetrics metrics;
};

// Every node learns every item of its component. Items travel over forest
// edges, at most one item per edge direction per round; a node forwards each
// new item to all its other tree neighbours.
BroadcastRun broadcast_items(const WeightedGraph& g, const SpanningForest& forest,
                             const std::vector<std::vector<Item>>& origin,
                             const EngineConfig& config = {});

}  // namespace congest
