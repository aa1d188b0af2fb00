#include "congest/blocker.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace congest {

std::int64_t ScoreTable::sum() const {
  return std::accumulate(total.begin(), total.end(), std::int64_t{0});
}

namespace {

EngineConfig undirected(EngineConfig config) {
  config.links = LinkMode::kUndirected;
  return config;
}

std::size_t index_of(const std::vector<NodeId>& sources, NodeId x) {
  return static_cast<std::size_t>(
      std::lower_bound(sources.begin(), sources.end(), x) - sources.begin());
}

struct TreeScore {
  NodeId x = 0;
  std::int64_t score = 0;
};

class ScoreConvergecast {
 public:
  struct Pending {
    Round at = 0;
    std::size_t tree = 0;
  };
  struct State {
    std::vector<std::int64_t> score;
    std::vector<std::vector<NodeId>> children;
    std::deque<Pending> pending;  // sorted by round
  };
  using Payload = TreeScore;

  explicit ScoreConvergecast(const CsSspCollection& c) : c_(c) {}

  State init(const LocalView& view) {
    const std::size_t k = c_.sources.size();
    State s{std::vector<std::int64_t>(k, 0), std::vector<std::vector<NodeId>>(k), {}};
    for (std::size_t i = 0; i < k; ++i) {
      const SpTree& t = c_.trees.at(c_.sources[i]);
      if (!t.contains(view.id())) continue;
      const TreeEntry& e = t.at(view.id());
      if (e.hops == c_.h) s.score[i] = 1;
      if (e.parent) {
        s.pending.push_back({static_cast<Round>(i) + c_.h - e.hops, i});
      }
    }
    std::stable_sort(s.pending.begin(), s.pending.end(),
                     [](const Pending& a, const Pending& b) { return a.at < b.at; });
    return s;
  }

  void send(State& s, const LocalView& view, Round r, Outbox<Payload>& out) {
    while (!s.pending.empty() && s.pending.front().at == r) {
      const std::size_t i = s.pending.front().tree;
      s.pending.pop_front();
      if (s.score[i] == 0) continue;
      const NodeId x = c_.sources[i];
      out.send(*c_.trees.at(x).at(view.id()).parent, {x, s.score[i]});
    }
  }

  void receive(State& s, const LocalView&, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) {
      const std::size_t i = index_of(c_.sources, m.payload.x);
      s.score[i] += m.payload.score;
      s.children[i].push_back(m.from);
    }
  }

  bool quiescent(const State& s, Round) const { return s.pending.empty(); }
  int bit_size(const Payload& m) const { return bits_for(m.x) + bits_for(m.score); }

 private:
  const CsSspCollection& c_;
};

struct Column {
  std::vector<std::int64_t> score;
  std::int64_t total = 0;
};

Column column_of(const ScoreTable& t, NodeId v) {
  Column col{{}, t.total[v]};
  for (const auto& row : t.per_tree) col.score.push_back(row[v]);
  return col;
}

void store_column(ScoreTable& t, NodeId v, const Column& col) {
  for (std::size_t i = 0; i < col.score.size(); ++i) t.per_tree[i][v] = col.score[i];
  t.total[v] = col.total;
}

bool is_chosen(const std::vector<NodeId>& chosen, NodeId v) {
  return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
}

class AncestorUpdate {
 public:
  struct State {
    Column col;
    std::deque<std::pair<std::size_t, std::int64_t>> queue;
  };
  using Payload = TreeScore;

  AncestorUpdate(const CsSspCollection& c, const ScoreTable& scores,
                 const std::vector<NodeId>& chosen)
      : c_(c), scores_(scores), chosen_(chosen) {}

  State init(const LocalView& view) {
    State s{column_of(scores_, view.id()), {}};
    if (!is_chosen(chosen_, view.id())) return s;
    for (std::size_t i = 0; i < s.col.score.size(); ++i) {
      if (s.col.score[i] > 0 && has_parent(i, view.id())) {
        s.queue.push_back({i, s.col.score[i]});
      }
    }
    return s;
  }

  void send(State& s, const LocalView& view, Round, Outbox<Payload>& out) {
    if (s.queue.empty()) return;
    auto [i, amount] = s.queue.front();
    s.queue.pop_front();
    const NodeId x = c_.sources[i];
    out.send(*c_.trees.at(x).at(view.id()).parent, {x, amount});
  }

  void receive(State& s, const LocalView& view, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) {
      const std::size_t i = index_of(c_.sources, m.payload.x);
      s.col.score[i] -= m.payload.score;
      s.col.total -= m.payload.score;
      if (has_parent(i, view.id())) s.queue.push_back({i, m.payload.score});
    }
  }

  bool quiescent(const State& s, Round) const { return s.queue.empty(); }
  int bit_size(const Payload& m) const { return bits_for(m.x) + bits_for(m.score); }

 private:
  bool has_parent(std::size_t i, NodeId v) const {
    const SpTree& t = c_.trees.at(c_.sources[i]);
    return t.contains(v) && t.at(v).parent.has_value();
  }

  const CsSspCollection& c_;
  const ScoreTable& scores_;
  const std::vector<NodeId>& chosen_;
};

class DescendantUpdate {
 public:
  struct State {
    Column col;
    std::deque<std::size_t> queue;
  };
  using Payload = NodeId;

  DescendantUpdate(const CsSspCollection& c, const ScoreTable& scores,
                   const std::vector<NodeId>& chosen,
                   const std::vector<std::vector<std::vector<NodeId>>>& children)
      : c_(c), scores_(scores), chosen_(chosen), children_(children) {}

  State init(const LocalView& view) {
    State s{column_of(scores_, view.id()), {}};
    if (!is_chosen(chosen_, view.id())) return s;
    for (std::size_t i = 0; i < s.col.score.size(); ++i) {
      if (s.col.score[i] > 0) s.queue.push_back(i);
      s.col.score[i] = 0;
    }
    s.col.total = 0;
    return s;
  }

  void send(State& s, const LocalView& view, Round, Outbox<Payload>& out) {
    if (s.queue.empty()) return;
    const std::size_t i = s.queue.front();
    s.queue.pop_front();
    for (NodeId child : children_[i][view.id()]) out.send(child, c_.sources[i]);
  }

  void receive(State& s, const LocalView& view, Round, std::span<const Delivery<Payload>> in) {
    for (const auto& m : in) {
      const std::size_t i = index_of(c_.sources, m.payload);
      s.col.total -= s.col.score[i];
      s.col.score[i] = 0;
      if (view.id() != m.payload && !children_[i][view.id()].empty()) s.queue.push_back(i);
    }
  }

  bool quiescent(const State& s, Round) const { return s.queue.empty(); }
  int bit_size(const Payload& x) const { return bits_for(x); }

 private:
  const CsSspCollection& c_;
  const ScoreTable& scores_;
  const std::vector<NodeId>& chosen_;
  const std::vector<std::vector<std::vector<NodeId>>>& children_;
};

template <typename Program>
RoundMetrics run_update(const WeightedGraph& g, Program& program, ScoreTable& scores,
                        const EngineConfig& config) {
  auto run = run_program(g, program, undirected(config));
  for (NodeId v = 0; v < g.n(); ++v) store_column(scores, v, run.states[v].col);
  return run.metrics;
}

}  // namespace

ScoreRun init_scores(const WeightedGraph& g, const CsSspCollection& c,
                     const EngineConfig& config) {
  ScoreConvergecast program(c);
  auto run = run_program(g, program, undirected(config));
  const std::size_t k = c.sources.size();
  ScoreRun out;
  out.scores.sources = c.sources;
  out.scores.per_tree.assign(k, std::vector<std::int64_t>(g.n(), 0));
  out.scores.total.assign(g.n(), 0);
  out.children.assign(k, std::vector<std::vector<NodeId>>(g.n()));
  for (NodeId v = 0; v < g.n(); ++v) {
    auto& s = run.states[v];
    for (std::size_t i = 0; i < k; ++i) {
      out.scores.per_tree[i][v] = s.score[i];
      out.scores.total[v] += s.score[i];
      std::sort(s.children[i].begin(), s.children[i].end());
      out.children[i][v] = std::move(s.children[i]);
    }
  }
  out.metrics = run.metrics;
  return out;
}

namespace {

Selection pick(const WeightedGraph& g, const SpanningForest& forest,
               const ScoreTable& scores, const EngineConfig& config) {
  MaxRun m = component_max(g, forest, scores.total, undirected(config));
  Selection out;
  out.metrics = m.metrics;
  for (NodeId root : forest.roots()) {
    const MaxCandidate& w = m.winner[root];
    if (w.value > 0) out.chosen.push_back(w.id);
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

}  // namespace

Selection select_blocker(const WeightedGraph& g, const SpanningForest& forest,
                         const ScoreTable& scores, const EngineConfig& config) {
  Selection out = pick(g, forest, scores, config);
  if (out.chosen.empty()) throw AllZero("every score is 0");
  return out;
}

RoundMetrics update_ancestors(const WeightedGraph& g, const CsSspCollection& c,
                              const std::vector<NodeId>& chosen, ScoreTable& scores,
                              const EngineConfig& config) {
  AncestorUpdate program(c, scores, chosen);
  return run_update(g, program, scores, config);
}

RoundMetrics update_descendants(const WeightedGraph& g, const CsSspCollection& c,
                                const std::vector<NodeId>& chosen,
                                const std::vector<std::vector<std::vector<NodeId>>>& children,
                                ScoreTable& scores, const EngineConfig& config) {
  DescendantUpdate program(c, scores, chosen, children);
  return run_update(g, program, scores, config);
}

BlockerRun compute_blocker_set(const WeightedGraph& g, const CsSspCollection& c,
                               const EngineConfig& config, const BlockerObserver& observer) {
  BlockerRun out;
  ForestRun forest = build_bfs_forest(g, undirected(config));
  out.phases = forest.phases;
  out.forest = forest.forest;
  ScoreRun init = init_scores(g, c, config);
  out.phases.push_back({"scores", init.metrics});
  out.initial_scores = init.scores;
  ScoreTable scores = std::move(init.scores);

  Phase select{"select", {}}, ancestors{"ancestors", {}}, descendants{"descendants", {}};
  while (true) {
    Selection s = pick(g, forest.forest, scores, config);
    select.metrics.append(s.metrics);
    if (s.chosen.empty()) break;
    BlockerIteration it{std::move(s.chosen), std::move(s.metrics), {}, {}};
    it.ancestors = update_ancestors(g, c, it.chosen, scores, config);
    it.descendants = update_descendants(g, c, it.chosen, init.children, scores, config);
    out.q.insert(out.q.end(), it.chosen.begin(), it.chosen.end());
    ancestors.metrics.append(it.ancestors);
    descendants.metrics.append(it.descendants);
    if (observer) observer(it, scores, out.q);
    out.iterations.push_back(std::move(it));
  }
  out.phases.push_back(std::move(select));
  out.phases.push_back(std::move(ancestors));
  out.phases.push_back(std::move(descendants));
  out.final_scores = std::move(scores);
  return out;
}

}  // namespace congest
