#pragma once

#include <set>
#include <utility>
#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"
#include "congest/sp_tree.hpp"

namespace congest {

enum class CsSspMethod { kPipelined, kBellmanFord };

struct CsSspRun {
  CsSspCollection collection;
  std::vector<Phase> phases;  // all on the 2h-hop construction
  RoundMetrics total() const { return total_of(phases); }
};

// Builds 2h-hop shortest-path trees for all sources, then keeps the first h
// hops of each. kPipelined runs the multi-source schedule with frontier
// labels at 2h; kBellmanFord runs 2h synchronous relaxation rounds. Both
// finish with the tree confirmation phase.
CsSspRun build_csssp(const WeightedGraph& g, std::vector<NodeId> sources,
                     std::int64_t h, Weight delta_cap, CsSspMethod method,
                     const EngineConfig& config = {});

// Drops every entry with more than h hops.
CsSspCollection truncate_to_h(const CsSspCollection& trees, std::int64_t h);

struct EdgeUnion {
  std::set<NodeId> nodes;
  std::set<std::pair<NodeId, NodeId>> edges;
};

// Union over all trees of the subtree hanging below c. Throws NotATree unless
// it is an out-tree rooted at c.
EdgeUnion subtree_out_tree(const CsSspCollection& c, NodeId root);

// Union over all sources x of the x -> c path in T_x. Throws NotATree unless
// it is an in-tree rooted at c.
EdgeUnion paths_in_tree(const CsSspCollection& c, NodeId target);

}  // namespace congest
