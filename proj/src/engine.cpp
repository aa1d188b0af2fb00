#include "congest/engine.hpp"

namespace congest {

int message_bit_budget(const WeightedGraph& g) {
  const auto scale = std::max<std::int64_t>(
      static_cast<std::int64_t>(g.n()), g.max_abs_weight() + 2);
  int log = 0;
  while ((std::int64_t{1} << log) < scale) ++log;
  return 4 * log;
}

int effective_bit_budget(const WeightedGraph& g, const EngineConfig& config) {
  return config.message_bit_budget > 0 ? config.message_bit_budget
                                       : message_bit_budget(g);
}

std::int64_t RoundMetrics::congestion() const {
  std::int64_t best = 0;
  for (const auto& [link, count] : per_edge_messages) best = std::max(best, count);
  return best;
}

std::int64_t RoundMetrics::total_messages() const {
  std::int64_t total = 0;
  for (const auto& [link, count] : per_edge_messages) total += count;
  return total;
}

void RoundMetrics::append(const RoundMetrics& later) {
  // Pad so later's round i lines up with global round rounds + i.
  per_round_totals.resize(static_cast<std::size_t>(rounds), 0);
  per_round_totals.insert(per_round_totals.end(),
                          later.per_round_totals.begin(),
                          later.per_round_totals.end());
  rounds += later.rounds;
  for (const auto& [link, count] : later.per_edge_messages) {
    per_edge_messages[link] += count;
  }
  max_node_receives_in_round =
      std::max(max_node_receives_in_round, later.max_node_receives_in_round);
}

RoundMetrics total_of(const std::vector<Phase>& phases) {
  RoundMetrics total;
  for (const Phase& p : phases) total.append(p.metrics);
  return total;
}

bool LocalView::adjacent(NodeId other) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), other,
      [](const IncidentEdge& e, NodeId key) { return e.neighbor < key; });
  return it != edges_.end() && it->neighbor == other;
}

const IncidentEdge& LocalView::edge_to(NodeId other) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), other,
      [](const IncidentEdge& e, NodeId key) { return e.neighbor < key; });
  if (it == edges_.end() || it->neighbor != other) {
    throw LocalityViolation("node " + std::to_string(id_) +
                            " is not adjacent to " + std::to_string(other));
  }
  return *it;
}

std::vector<LocalView> local_views(const WeightedGraph& g) {
  std::vector<LocalView> views;
  views.reserve(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    std::map<NodeId, IncidentEdge> incident;
    for (const Arc& a : g.out(v)) {
      incident[a.to].neighbor = a.to;
      incident[a.to].out_weight = a.w;
    }
    for (const Arc& a : g.in(v)) {
      incident[a.to].neighbor = a.to;
      incident[a.to].in_weight = a.w;
    }
    std::vector<IncidentEdge> edges;
    edges.reserve(incident.size());
    for (auto& [id, e] : incident) edges.push_back(e);
    views.emplace_back(v, g.n(), std::move(edges));
  }
  return views;
}

}  // namespace congest
