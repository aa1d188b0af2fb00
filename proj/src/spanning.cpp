#include "congest/spanning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace congest {

std::int64_t SpanningForest::height() const {
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<NodeId> SpanningForest::roots() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < parent.size(); ++v) {
    if (!parent[v]) out.push_back(v);
  }
  return out;
}

namespace {

struct FloodMsg {
  NodeId root = 0;
  std::int64_t dist = 0;
};

class MinIdFlood {
 public:
  struct State {
    NodeId root = 0;
    std::int64_t dist = 0;
    std::optional<NodeId> parent;
    bool changed = true;
  };
  using Payload = FloodMsg;

  State init(const LocalView& v) { return {v.id(), 0, std::nullopt, true}; }

  void send(State& s, const LocalView&, Round, Outbox<Payload>& out) {
    if (!s.changed) return;
    out.send_all({s.root, s.dist});
    s.changed = false;
  }

  void receive(State& s, const LocalView&, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) {
      auto cand = std::make_pair(m.payload.root, m.payload.dist + 1);
      if (cand < std::make_pair(s.root, s.dist)) {
        s.root = cand.first;
        s.dist = cand.second;
        s.parent = m.from;
        s.changed = true;
      }
    }
  }

  bool quiescent(const State& s, Round) const { return !s.changed; }
  int bit_size(const Payload& m) const { return bits_for(m.root) + bits_for(m.dist); }
};

class NotifyParent {
 public:
  struct State {
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
    bool done = false;
  };
  using Payload = int;

  explicit NotifyParent(const std::vector<std::optional<NodeId>>& parent)
      : parent_(parent) {}

  State init(const LocalView& v) { return {parent_[v.id()], {}, false}; }
  void send(State& s, const LocalView&, Round, Outbox<Payload>& out) {
    if (s.parent && !s.done) out.send(*s.parent, 1);
    s.done = true;
  }
  void receive(State& s, const LocalView&, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) s.children.push_back(m.from);
  }
  bool quiescent(const State& s, Round) const { return s.done || !s.parent; }
  int bit_size(const Payload&) const { return 1; }

 private:
  const std::vector<std::optional<NodeId>>& parent_;
};

bool better(const MaxCandidate& a, const MaxCandidate& b) {
  return a.value > b.value || (a.value == b.value && a.id < b.id);
}

struct MaxMsg {
  bool down = false;
  MaxCandidate cand;
};

class ConvergecastMax {
 public:
  struct State {
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
    MaxCandidate best;
    std::size_t waiting = 0;
    bool sent_up = false;
    std::optional<MaxCandidate> result;
    bool sent_down = false;
  };
  using Payload = MaxMsg;

  ConvergecastMax(const SpanningForest& f, const std::vector<std::int64_t>& values)
      : forest_(f), values_(values) {}

  State init(const LocalView& v) {
    State s;
    s.parent = forest_.parent[v.id()];
    s.children = forest_.children[v.id()];
    s.best = {values_[v.id()], v.id()};
    s.waiting = s.children.size();
    return s;
  }

  void send(State& s, const LocalView&, Round, Outbox<Payload>& out) {
    if (s.waiting == 0 && !s.sent_up) {
      s.sent_up = true;
      if (s.parent) {
        out.send(*s.parent, {false, s.best});
      } else {
        s.result = s.best;
      }
    }
    if (s.result && !s.sent_down) {
      for (NodeId c : s.children) out.send(c, {true, *s.result});
      s.sent_down = true;
    }
  }

  void receive(State& s, const LocalView&, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) {
      if (m.payload.down) {
        s.result = m.payload.cand;
      } else {
        if (better(m.payload.cand, s.best)) s.best = m.payload.cand;
        --s.waiting;
      }
    }
  }

  bool quiescent(const State& s, Round) const { return s.result && s.sent_down; }
  int bit_size(const Payload& m) const {
    return 1 + bits_for(m.cand.value) + bits_for(m.cand.id);
  }

 private:
  const SpanningForest& forest_;
  const std::vector<std::int64_t>& values_;
};

class TreeGossip {
 public:
  struct State {
    std::set<Item> known;
    std::map<NodeId, std::deque<Item>> queue;  // per tree neighbour
  };
  using Payload = Item;

  TreeGossip(const SpanningForest& f, const std::vector<std::vector<Item>>& origin)
      : forest_(f), origin_(origin) {}

  State init(const LocalView& v) {
    State s;
    if (forest_.parent[v.id()]) s.queue[*forest_.parent[v.id()]];
    for (NodeId c : forest_.children[v.id()]) s.queue[c];
    for (const Item& item : origin_[v.id()]) learn(s, item, std::nullopt);
    return s;
  }

  void send(State& s, const LocalView&, Round, Outbox<Payload>& out) {
    for (auto& [nbr, q] : s.queue) {
      if (q.empty()) continue;
      out.send(nbr, q.front());
      q.pop_front();
    }
  }

  void receive(State& s, const LocalView&, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) learn(s, m.payload, m.from);
  }

  bool quiescent(const State& s, Round) const {
    return std::all_of(s.queue.begin(), s.queue.end(),
                       [](const auto& kv) { return kv.second.empty(); });
  }

  int bit_size(const Payload& item) const {
    return bits_for(item[0]) + bits_for(item[1]) + bits_for(item[2]);
  }

 private:
  static void learn(State& s, const Item& item, std::optional<NodeId> from) {
    if (!s.known.insert(item).second) return;
    for (auto& [nbr, q] : s.queue) {
      if (nbr != from) q.push_back(item);
    }
  }

  const SpanningForest& forest_;
  const std::vector<std::vector<Item>>& origin_;
};

}  // namespace

ForestRun build_bfs_forest(const WeightedGraph& g, const EngineConfig& config) {
  MinIdFlood flood;
  auto flooded = run_program(g, flood, config);
  ForestRun out;
  SpanningForest& f = out.forest;
  for (const auto& s : flooded.states) {
    f.parent.push_back(s.parent);
    f.root.push_back(s.root);
    f.depth.push_back(s.dist);
  }
  NotifyParent notify(f.parent);
  auto notified = run_program(g, notify, config);
  for (auto& s : notified.states) {
    std::sort(s.children.begin(), s.children.end());
    f.children.push_back(std::move(s.children));
  }
  out.phases = {{"bfs-flood", flooded.metrics}, {"bfs-children", notified.metrics}};
  return out;
}

MaxRun component_max(const WeightedGraph& g, const SpanningForest& forest,
                     const std::vector<std::int64_t>& values,
                     const EngineConfig& config) {
  ConvergecastMax program(forest, values);
  auto run = run_program(g, program, config);
  MaxRun out;
  out.metrics = run.metrics;
  for (const auto& s : run.states) out.winner.push_back(*s.result);
  return out;
}

BroadcastRun broadcast_items(const WeightedGraph& g, const SpanningForest& forest,
                             const std::vector<std::vector<Item>>& origin,
                             const EngineConfig& config) {
  TreeGossip program(forest, origin);
  auto run = run_program(g, program, config);
  BroadcastRun out;
  out.metrics = run.metrics;
  for (const auto& s : run.states) {
    out.known.emplace_back(s.known.begin(), s.known.end());
  }
  return out;
}

}  // namespace congest
