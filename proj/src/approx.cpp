#include "congest/approx.hpp"

#include <algorithm>
#include <numeric>

#include "congest/pipelined.hpp"

namespace congest {

namespace {

class ZeroFlood {
 public:
  struct State {
    bool reached = false;
    bool pending = false;
  };
  using Payload = bool;

  explicit ZeroFlood(NodeId source) : source_(source) {}

  State init(const LocalView& view) {
    const bool s = view.id() == source_;
    return {s, s};
  }

  void send(State& s, const LocalView& view, Round, Outbox<Payload>& out) {
    if (!s.pending) return;
    s.pending = false;
    for (const IncidentEdge& e : view.edges()) {
      if (e.out_weight == Weight{0}) out.send(e.neighbor, true);
    }
  }

  void receive(State& s, const LocalView&, Round, std::span<const Delivery<Payload>> in) {
    if (!in.empty() && !s.reached) s.reached = s.pending = true;
  }

  bool quiescent(const State& s, Round) const { return !s.pending; }
  int bit_size(const Payload&) const { return 1; }

 private:
  NodeId source_;
};

}  // namespace

ZeroReach zero_reachability(const WeightedGraph& g, const EngineConfig& config) {
  if (g.has_negative_weight()) throw NegativeWeight("zero reachability needs nonnegative weights");
  EngineConfig cfg = config;
  cfg.links = LinkMode::kDirectedOut;
  ZeroReach out;
  out.reach.assign(g.n(), std::vector<bool>(g.n(), false));
  for (NodeId s = 0; s < g.n(); ++s) {
    ZeroFlood program(s);
    auto run = run_program(g, program, cfg);
    for (NodeId v = 0; v < g.n(); ++v) out.reach[s][v] = run.states[v].reached;
    out.metrics.append(run.metrics);
  }
  return out;
}

WeightedGraph scale_weights(const WeightedGraph& g) {
  if (g.has_negative_weight()) throw NegativeWeight("scaling needs nonnegative weights");
  const auto n2 = static_cast<Weight>(g.n() * g.n());
  EdgeList list{g.n(), g.directed(), WeightMode::kNonnegative, {}};
  for (const Edge& e : g.edges()) list.edges.push_back({e.u, e.v, e.w == 0 ? 1 : n2 * e.w});
  return validate(std::move(list));
}

DistanceMatrix exact_subroutine(const WeightedGraph& g, const EngineConfig& config,
                                std::vector<Phase>& phases) {
  std::vector<NodeId> all(g.n());
  std::iota(all.begin(), all.end(), NodeId{0});
  const auto hops = std::max<std::int64_t>(1, static_cast<std::int64_t>(g.n()) - 1);
  BellmanFordRun bf = distributed_bellman_ford(g, all, hops, config, false);
  for (const Phase& p : bf.phases) phases.push_back({"subroutine:" + p.name, p.metrics});
  DistanceMatrix m(g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    for (NodeId v = 0; v < g.n(); ++v) {
      if (bf.labels[s][v]) m.set(s, v, Distance(bf.labels[s][v]->dist));
    }
  }
  return m;
}

ApproxResult approx_apsp(const WeightedGraph& g, const ApproxConfig& config) {
  const std::size_t n = g.n();
  const auto nn = static_cast<std::int64_t>(n);
  if (config.epsilon <= Rational(3, nn)) {
    throw EpsilonTooSmall("epsilon must exceed 3/n = 3/" + std::to_string(n));
  }
  ApproxResult out;
  out.n = n;
  out.epsilon = config.epsilon;

  ZeroReach zero = zero_reachability(g, config.engine);
  out.phases.push_back({"zero-reachability", zero.metrics});

  WeightedGraph scaled = scale_weights(g);
  DistanceMatrix sub = config.subroutine(scaled, config.engine, out.phases);

  out.est.assign(n, std::vector<std::optional<Rational>>(n));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (zero.reach[u][v]) {
        out.est[u][v] = Rational(0);
      } else if (sub.at(u, v).finite()) {
        out.est[u][v] = Rational(sub.at(u, v).value(), nn * nn);
      }
    }
  }
  return out;
}

}  // namespace congest
