#pragma once

#include <span>
#include <string>
#include <vector>

#include "congest/graph.hpp"
#include "congest/sp_tree.hpp"
#include "congest/types.hpp"

namespace congest {

// Sequential reference implementations. Deliberately plain.

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n)
      : n_(n), dist_(n * n), parent_(n * n) {}

  std::size_t n() const { return n_; }
  Distance at(NodeId s, NodeId t) const { return dist_[index(s, t)]; }
  void set(NodeId s, NodeId t, Distance d) { dist_[index(s, t)] = d; }
  std::optional<NodeId> parent(NodeId s, NodeId t) const {
    return parent_[index(s, t)];
  }
  void set_parent(NodeId s, NodeId t, std::optional<NodeId> p) {
    parent_[index(s, t)] = p;
  }
  std::vector<Distance> row(NodeId s) const {
    return {dist_.begin() + index(s, 0), dist_.begin() + index(s, 0) + n_};
  }

 private:
  std::size_t index(NodeId s, NodeId t) const { return s * n_ + t; }

  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  std::vector<std::optional<NodeId>> parent_;
};

// Lexicographic (distance, hops) Dijkstra from every node; parent is the
// smallest-ID predecessor whose label chains exactly.
DistanceMatrix dijkstra_apsp(const WeightedGraph& g);

// Exact lexicographic labels over walks of at most `max_hops` edges. With
// max_hops >= n a distance that still drops at step n means a reachable
// negative cycle.
std::vector<MaybeLabel> bellman_ford_oracle(const WeightedGraph& g, NodeId s,
                                            std::int64_t max_hops);

// All rows of bellman_ford_oracle(g, s, n); throws NegativeCycle.
DistanceMatrix bellman_ford_apsp(const WeightedGraph& g);

// h-hop shortest-path tree of a source. Labels are exact over <=h-hop walks.
// A node's parent is its smallest-ID in-neighbour y with
// label(y).extend(w(y,v)) == label(v); members are the nodes whose parent
// chain reaches the source. Nodes with a label but no anchored chain are
// left out of the tree.
struct HopBoundedRow {
  std::vector<MaybeLabel> labels;
  SpTree tree;
};

HopBoundedRow hop_bounded_sssp(const WeightedGraph& g, NodeId s, std::int64_t h);

struct HopBoundedTable {
  std::int64_t h = 0;
  std::vector<HopBoundedRow> rows;

  Distance dist(NodeId s, NodeId t) const;
};

HopBoundedTable hop_bounded_apsp(const WeightedGraph& g, std::int64_t h);

// Nodes whose unbounded lexicographic shortest path from s has at most h hops
// and weight at most delta_cap. On these, every correct h-hop method must
// agree with hop_bounded_sssp node for node.
std::vector<bool> short_path_domain(const WeightedGraph& g, NodeId s,
                                    std::int64_t h, Weight delta_cap);

// min over seeded u of seed(u) + (<=h-hop distance u -> v).
std::vector<Distance> seeded_hop_bounded(const WeightedGraph& g,
                                         const std::vector<Distance>& seeds,
                                         std::int64_t h);

// reach[u][v]: a path of weight-0 edges leads from u to v (reflexive).
std::vector<std::vector<bool>> zero_weight_closure(const WeightedGraph& g);

struct Verdict {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Every root-to-node path of exactly h hops must contain a vertex of Q
// (endpoints count).
Verdict verify_blocker(const CsSspCollection& c, std::int64_t h,
                       std::span<const NodeId> q);

// (a) any u -> v path present in two trees is identical in both;
// (b) every tree entry is well formed and equals the exact h-hop label;
// (c) each T_u contains every v whose shortest u -> v path has <= h hops.
Verdict verify_csssp(const WeightedGraph& g, const CsSspCollection& c);

// score[i][v] for x = c.sources[i]: depth-h members of T_x below v (v
// included) whose root path avoids Q; 0 for v in Q.
std::vector<std::vector<std::int64_t>> recount_scores(
    const CsSspCollection& c, std::span<const NodeId> q);

}  // namespace congest
