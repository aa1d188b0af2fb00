#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congest/graph.hpp"
#include "congest/types.hpp"

namespace congest {

enum class BandwidthMode { kUnboundedMetered, kFifo };

// Which edges a node may send over: every edge of the underlying undirected
// graph, or only its outgoing arcs.
enum class LinkMode { kUndirected, kDirectedOut };

struct EngineConfig {
  Round round_limit = 1'000'000;
  BandwidthMode bandwidth = BandwidthMode::kUnboundedMetered;
  LinkMode links = LinkMode::kUndirected;
  // 0 means "derive from the graph" (see message_bit_budget()).
  int message_bit_budget = 0;
};

// B = 4 * ceil(log2(max(n, W + 2))), W the largest absolute edge weight.
int message_bit_budget(const WeightedGraph& g);
int effective_bit_budget(const WeightedGraph& g, const EngineConfig& config);

// Bits needed to write `value` in binary, plus a sign bit for negatives.
constexpr int bits_for(std::int64_t value) {
  if (value < 0) return 1 + bits_for(-value);
  return value == 0 ? 1 : static_cast<int>(std::bit_width(
                              static_cast<std::uint64_t>(value)));
}

struct RoundMetrics {
  Round rounds = 0;
  // (from, to) -> messages carried in that direction.
  std::map<std::pair<NodeId, NodeId>, std::int64_t> per_edge_messages;
  std::vector<std::int64_t> per_round_totals;
  std::int64_t max_node_receives_in_round = 0;

  Round dilation() const { return rounds; }
  std::int64_t congestion() const;
  std::int64_t total_messages() const;

  // Sequential composition: `later` runs after this one finishes.
  void append(const RoundMetrics& later);
};

struct Phase {
  std::string name;
  RoundMetrics metrics;
};

RoundMetrics total_of(const std::vector<Phase>& phases);

struct IncidentEdge {
  NodeId neighbor = 0;
  std::optional<Weight> out_weight;  // weight of (self, neighbor) if present
  std::optional<Weight> in_weight;   // weight of (neighbor, self) if present
};

// Everything a node may look at: its ID and its incident edges.
class LocalView {
 public:
  LocalView(NodeId id, std::size_t n, std::vector<IncidentEdge> edges)
      : id_(id), n_(n), edges_(std::move(edges)) {}

  NodeId id() const { return id_; }
  // Node count; treated as global knowledge, as is usual in CONGEST.
  std::size_t n() const { return n_; }
  std::span<const IncidentEdge> edges() const { return edges_; }
  bool adjacent(NodeId other) const;
  const IncidentEdge& edge_to(NodeId other) const;

 private:
  NodeId id_;
  std::size_t n_;
  std::vector<IncidentEdge> edges_;
};

std::vector<LocalView> local_views(const WeightedGraph& g);

template <class Payload>
struct Delivery {
  NodeId from = 0;
  Payload payload;
};

template <class Payload>
struct Envelope {
  NodeId from = 0;
  NodeId to = 0;
  Payload payload;
};

template <class Payload>
class Outbox {
 public:
  Outbox(const LocalView& view, LinkMode links)
      : view_(view), links_(links) {}

  void send(NodeId to, Payload payload) {
    const IncidentEdge& e = view_.edge_to(to);
    if (links_ == LinkMode::kDirectedOut && !e.out_weight) {
      throw LocalityViolation("node " + std::to_string(view_.id()) +
                              " has no outgoing edge to " + std::to_string(to));
    }
    queued_.push_back({view_.id(), to, std::move(payload)});
  }

  // One copy to every neighbour reachable under the link mode.
  void send_all(const Payload& payload) {
    for (const IncidentEdge& e : view_.edges()) {
      if (links_ == LinkMode::kDirectedOut && !e.out_weight) continue;
      queued_.push_back({view_.id(), e.neighbor, payload});
    }
  }

  std::vector<Envelope<Payload>>& queued() { return queued_; }

 private:
  const LocalView& view_;
  LinkMode links_;
  std::vector<Envelope<Payload>> queued_;
};

template <class P>
concept NodeProgram = requires(P p, const P cp, typename P::State& s,
                               const typename P::State& cs,
                               const LocalView& view, Round r,
                               Outbox<typename P::Payload>& out,
                               std::span<const Delivery<typename P::Payload>> in,
                               const typename P::Payload& payload) {
  { p.init(view) } -> std::same_as<typename P::State>;
  p.send(s, view, r, out);
  p.receive(s, view, r, in);
  { cp.quiescent(cs, r) } -> std::convertible_to<bool>;
  { cp.bit_size(payload) } -> std::convertible_to<int>;
};

template <class State>
struct RunResult {
  std::vector<State> states;
  RoundMetrics metrics;
};

// Runs `program` on every node of `g` in lock step. Round r: every node
// computes its sends from its state after round r-1, all messages travel,
// then every node processes what arrived. A message sent in round r can
// therefore only influence sends from round r+1 on. The run stops at the
// first round in which every node is quiescent and nothing is queued;
// `rounds` is that round's index.
template <NodeProgram P>
RunResult<typename P::State> run_program(const WeightedGraph& g, P& program,
                                         const EngineConfig& config = {}) {
  using Payload = typename P::Payload;
  using State = typename P::State;
  if (config.round_limit <= 0) {
    throw InvalidArgument("round_limit must be positive");
  }
  const std::vector<LocalView> views = local_views(g);
  const int budget = effective_bit_budget(g, config);
  const std::size_t n = g.n();

  RunResult<State> result;
  result.states.reserve(n);
  for (const LocalView& v : views) result.states.push_back(program.init(v));

  std::map<std::pair<NodeId, NodeId>, std::deque<Payload>> in_flight;
  std::size_t in_flight_count = 0;
  std::vector<std::vector<Delivery<Payload>>> inbox(n);

  for (Round r = 0;; ++r) {
    bool idle = in_flight_count == 0;
    for (std::size_t v = 0; idle && v < n; ++v) {
      idle = program.quiescent(result.states[v], r);
    }
    if (idle) {
      result.metrics.rounds = r;
      break;
    }
    if (r >= config.round_limit) {
      throw RoundLimitExceeded("no quiescence after " +
                               std::to_string(config.round_limit) + " rounds");
    }

    std::int64_t sent_this_round = 0;
    for (std::size_t v = 0; v < n; ++v) {
      Outbox<Payload> out(views[v], config.links);
      program.send(result.states[v], views[v], r, out);
      for (auto& env : out.queued()) {
        const int bits = program.bit_size(env.payload);
        if (bits > budget) {
          throw MessageTooLarge("message of " + std::to_string(bits) +
                                " bits exceeds budget " +
                                std::to_string(budget));
        }
        ++result.metrics.per_edge_messages[{env.from, env.to}];
        ++sent_this_round;
        if (config.bandwidth == BandwidthMode::kUnboundedMetered) {
          inbox[env.to].push_back({env.from, std::move(env.payload)});
        } else {
          in_flight[{env.from, env.to}].push_back(std::move(env.payload));
          ++in_flight_count;
        }
      }
    }
    if (config.bandwidth == BandwidthMode::kFifo) {
      for (auto& [link, queue] : in_flight) {
        if (queue.empty()) continue;
        inbox[link.second].push_back({link.first, std::move(queue.front())});
        queue.pop_front();
        --in_flight_count;
      }
    }
    result.metrics.per_round_totals.push_back(sent_this_round);

    for (std::size_t v = 0; v < n; ++v) {
      auto& box = inbox[v];
      std::stable_sort(box.begin(), box.end(),
                       [](const Delivery<Payload>& a,
                          const Delivery<Payload>& b) { return a.from < b.from; });
      result.metrics.max_node_receives_in_round =
          std::max<std::int64_t>(result.metrics.max_node_receives_in_round,
                                 static_cast<std::int64_t>(box.size()));
      program.receive(result.states[v], views[v], r,
                      std::span<const Delivery<Payload>>(box));
      box.clear();
    }
  }
  return result;
}

}  // namespace congest
