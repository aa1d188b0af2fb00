#pragma once

#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"
#include "congest/sp_tree.hpp"
#include "congest/types.hpp"

namespace congest {

// Send schedule ceil(d * gamma) + l with gamma^2 = gamma_num / gamma_den,
// evaluated exactly.
struct PipelineSchedule {
  std::int64_t h = 1;
  Weight delta_cap = 0;
  std::int64_t k = 1;
  std::int64_t gamma_num = 1;
  std::int64_t gamma_den = 1;

  // gamma = sqrt(h)
  static PipelineSchedule single_source(std::int64_t h, Weight delta_cap);
  // gamma = sqrt(h * k / delta_cap)
  static PipelineSchedule multi_source(std::int64_t h, std::int64_t k,
                                       Weight delta_cap);

  Round send_round(Weight d, std::int64_t l) const;
  // Schedule slot of the largest admissible label (delta_cap, h).
  Round last_slot() const { return send_round(delta_cap, h); }
};

// Smallest t >= 0 with t^2 * den >= d^2 * num, i.e. ceil(d * sqrt(num/den)).
std::int64_t ceil_mul_sqrt(Weight d, std::int64_t num, std::int64_t den);

// kSingle: every node keeps one lexicographically best (d, l) label.
// kFrontier: every node keeps and forwards all pairwise non-dominated (d, l)
// labels, each at its own slot.
enum class LabelMode { kSingle, kFrontier };

struct SourceRun {
  NodeId source = 0;
  std::vector<MaybeLabel> labels;
  // Adopted sender of the current label (raw, before confirmation).
  std::vector<std::optional<NodeId>> adopted_from;
  // Confirmed tree: smallest-ID in-neighbour whose final label chains, kept
  // only when the chain reaches a root.
  SpTree tree;
  // Per node: sends made, round in which the final label arrived (-1 for
  // roots and unreached nodes).
  std::vector<std::int64_t> sends;
  std::vector<Round> arrival;

  // Largest per-node send count; equals this source's per-edge-direction
  // congestion because every send goes to all out-neighbours once.
  std::int64_t congestion() const;
};

struct PipelineResult {
  PipelineSchedule schedule;
  std::vector<SourceRun> runs;  // in the order of the sources argument
  std::int64_t late_sends = 0;
  std::int64_t adoptions = 0;
  Round last_send_round = -1;
  std::vector<Phase> phases;  // "pipeline", then "confirm"
  RoundMetrics metrics;       // the pipeline phase
  RoundMetrics total() const { return total_of(phases); }
};

// Algorithm 3 for one source; gamma = sqrt(h).
PipelineResult short_range(const WeightedGraph& g, NodeId source, std::int64_t h,
                           Weight delta_cap, LabelMode mode = LabelMode::kSingle,
                           const EngineConfig& config = {});

// Algorithm 3 started from seeded distances: every node with a finite seed
// starts at label (seed, 0); the source is seeded with 0. Hop counts restart
// at the seeds.
PipelineResult short_range_extension(const WeightedGraph& g, NodeId source,
                                     std::int64_t h,
                                     const std::vector<Distance>& seeds,
                                     Weight delta_cap,
                                     LabelMode mode = LabelMode::kSingle,
                                     const EngineConfig& config = {});

// All sources at once, gamma = sqrt(h k / delta_cap); messages carry the
// source ID.
PipelineResult multi_source_pipelined(const WeightedGraph& g,
                                      const std::vector<NodeId>& sources,
                                      std::int64_t h, Weight delta_cap,
                                      LabelMode mode = LabelMode::kSingle,
                                      const EngineConfig& config = {});

struct BellmanFordRun {
  std::vector<NodeId> sources;
  // labels[i][v]: best (dist, hops) from sources[i] over <= h-hop walks.
  std::vector<std::vector<MaybeLabel>> labels;
  std::vector<SpTree> trees;  // filled by with_trees
  bool unsettled = false;     // some label still dropped in round h
  std::vector<Phase> phases;
  RoundMetrics metrics;  // relaxation phase
  RoundMetrics total() const { return total_of(phases); }
};

// Synchronous lexicographic Bellman-Ford for every source at once: in each
// round a node forwards the labels that changed in the previous round. Stops
// after h rounds or at quiescence. Works for any weights.
BellmanFordRun distributed_bellman_ford(const WeightedGraph& g,
                                        const std::vector<NodeId>& sources,
                                        std::int64_t h,
                                        const EngineConfig& config = {},
                                        bool with_trees = false);

// Exchange final labels once, pick the smallest-ID chaining in-neighbour as
// parent, then grow membership down from the roots: the nodes whose label has
// 0 hops (the source, plus seeds in the extension variant, which stay
// parentless entries).
struct Confirmation {
  std::vector<SpTree> trees;
  RoundMetrics metrics;
};
Confirmation confirm_trees(const WeightedGraph& g,
                           const std::vector<NodeId>& sources,
                           const std::vector<std::vector<MaybeLabel>>& labels,
                           const EngineConfig& config = {});

}  // namespace congest
