#pragma once

#include <functional>
#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"
#include "congest/sp_tree.hpp"
#include "congest/spanning.hpp"

namespace congest {

// per_tree[i][v] = score of v in the tree of sources[i]: the number of
// not yet covered depth-h members below v (v included).
struct ScoreTable {
  std::vector<NodeId> sources;
  std::vector<std::vector<std::int64_t>> per_tree;
  std::vector<std::int64_t> total;

  std::int64_t sum() const;
  friend bool operator==(const ScoreTable&, const ScoreTable&) = default;
};

struct ScoreRun {
  ScoreTable scores;
  // children[i][v]: children of v in tree i that reported a positive score.
  std::vector<std::vector<std::vector<NodeId>>> children;
  RoundMetrics metrics;
};

// Leaf-to-root convergecast in every tree. A member at depth d of the i-th
// tree reports to its parent in round i + (h - d), so no node needs to know
// its children in advance.
ScoreRun init_scores(const WeightedGraph& g, const CsSspCollection& c,
                     const EngineConfig& config = {});

struct Selection {
  std::vector<NodeId> chosen;  // one per component with a positive maximum
  RoundMetrics metrics;
};

// Largest total score in each component, smallest ID on ties. Throws AllZero
// when every score is 0.
Selection select_blocker(const WeightedGraph& g, const SpanningForest& forest,
                         const ScoreTable& scores, const EngineConfig& config = {});

// Every chosen c pushes (x, score_x(c)) up its root path in T_x, one tree per
// round; each strict ancestor subtracts it.
RoundMetrics update_ancestors(const WeightedGraph& g, const CsSspCollection& c,
                              const std::vector<NodeId>& chosen, ScoreTable& scores,
                              const EngineConfig& config = {});

// Algorithm 2: every chosen c zeroes its scores and, in round i, sends the
// i-th tree of its list down that tree; receivers zero their score for that
// tree and pass it on to their children.
RoundMetrics update_descendants(const WeightedGraph& g, const CsSspCollection& c,
                                const std::vector<NodeId>& chosen,
                                const std::vector<std::vector<std::vector<NodeId>>>& children,
                                ScoreTable& scores, const EngineConfig& config = {});

struct BlockerIteration {
  std::vector<NodeId> chosen;
  RoundMetrics select;
  RoundMetrics ancestors;
  RoundMetrics descendants;
};

struct BlockerRun {
  std::vector<NodeId> q;  // selection order: by iteration, then ID
  SpanningForest forest;
  ScoreTable initial_scores;
  ScoreTable final_scores;
  std::vector<BlockerIteration> iterations;
  std::vector<Phase> phases;
  RoundMetrics total() const { return total_of(phases); }
};

using BlockerObserver =
    std::function<void(const BlockerIteration&, const ScoreTable&, const std::vector<NodeId>& q)>;

// Greedy loop: select, update ancestors, update descendants, until AllZero.
// Components of the communication graph run their greedy loops side by side.
BlockerRun compute_blocker_set(const WeightedGraph& g, const CsSspCollection& c,
                               const EngineConfig& config = {},
                               const BlockerObserver& observer = {});

}  // namespace congest
