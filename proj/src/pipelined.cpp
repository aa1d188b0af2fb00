#include "congest/pipelined.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace congest {

std::int64_t ceil_mul_sqrt(Weight d, std::int64_t num, std::int64_t den) {
  if (d < 0 || num < 0 || den <= 0) {
    throw InvalidArgument("ceil_mul_sqrt needs d >= 0, num >= 0, den > 0");
  }
  using i128 = __int128;
  const i128 target = static_cast<i128>(d) * d * num;
  auto t = static_cast<std::int64_t>(
      std::sqrt(static_cast<long double>(target) / static_cast<long double>(den)));
  while (t > 0 && static_cast<i128>(t - 1) * (t - 1) * den >= target) --t;
  while (static_cast<i128>(t) * t * den < target) ++t;
  return t;
}

PipelineSchedule PipelineSchedule::single_source(std::int64_t h, Weight delta_cap) {
  if (h < 1) throw InvalidHopBound("h must be >= 1");
  if (delta_cap < 0) throw InvalidArgument("delta_cap must be >= 0");
  return {h, delta_cap, 1, h, 1};
}

PipelineSchedule PipelineSchedule::multi_source(std::int64_t h, std::int64_t k,
                                                Weight delta_cap) {
  if (h < 1) throw InvalidHopBound("h must be >= 1");
  if (k < 1) throw InvalidArgument("need at least one source");
  if (delta_cap < 1) throw InvalidArgument("delta_cap must be >= 1");
  const std::int64_t num = h * k;
  const std::int64_t g = std::gcd(num, delta_cap);
  return {h, delta_cap, k, num / g, delta_cap / g};
}

Round PipelineSchedule::send_round(Weight d, std::int64_t l) const {
  return ceil_mul_sqrt(d, gamma_num, gamma_den) + l;
}

std::int64_t SourceRun::congestion() const {
  return sends.empty() ? 0 : *std::max_element(sends.begin(), sends.end());
}

namespace {

struct LabelMsg {
  NodeId source = 0;
  Weight d = 0;
  std::int64_t l = 0;
};

int label_bits(const LabelMsg& m, bool carry_source) {
  return (carry_source ? bits_for(m.source) : 0) + bits_for(m.d) + bits_for(m.l);
}

std::vector<int> index_sources(std::size_t n, const std::vector<NodeId>& sources) {
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i] >= n) throw InvalidArgument("source out of range");
    if (index[sources[i]] >= 0) throw InvalidArgument("duplicate source");
    index[sources[i]] = static_cast<int>(i);
  }
  return index;
}

// Algorithm 3, generalized to k sources and optional frontier labels.
class Pipeline {
 public:
  struct Pending {
    Label label;
    NodeId from = 0;
    Round due = -1;  // -1 once sent
    Round arrived = -1;
  };
  struct Slot {
    MaybeLabel label;
    std::optional<NodeId> from;
    Round arrival = -1;
    Round due = -1;                // kSingle
    std::vector<Pending> frontier;  // kFrontier
    std::int64_t sends = 0;
  };
  struct State {
    std::vector<Slot> slots;
    std::int64_t late = 0;
    std::int64_t adoptions = 0;
    Round last_send = -1;
  };
  using Payload = LabelMsg;

  Pipeline(std::vector<NodeId> sources, std::vector<std::vector<Distance>> seeds,
           PipelineSchedule schedule, LabelMode mode, std::size_t n)
      : sources_(std::move(sources)),
        seeds_(std::move(seeds)),
        schedule_(schedule),
        mode_(mode),
        index_(index_sources(n, sources_)) {}

  State init(const LocalView& view) {
    State s;
    s.slots.resize(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      Distance seed = seeds_.empty() ? Distance() : seeds_[i][view.id()];
      if (sources_[i] == view.id()) seed = Distance(0);
      if (seed.finite()) {
        Label l{seed.value(), 0};
        Slot& slot = s.slots[i];
        slot.label = l;
        const Round due = schedule_.send_round(l.dist, 0);
        if (mode_ == LabelMode::kSingle) {
          slot.due = due;
        } else {
          slot.frontier.push_back({l, view.id(), due, -1});
        }
      }
    }
    return s;
  }

  void send(State& s, const LocalView&, Round r, Outbox<Payload>& out) {
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
      Slot& slot = s.slots[i];
      if (mode_ == LabelMode::kSingle) {
        if (slot.due != r) continue;
        out.send_all({sources_[i], slot.label->dist, slot.label->hops});
        slot.due = -1;
        ++slot.sends;
        s.last_send = r;
      } else {
        for (Pending& p : slot.frontier) {
          if (p.due != r) continue;
          out.send_all({sources_[i], p.label.dist, p.label.hops});
          p.due = -1;
          ++slot.sends;
          s.last_send = r;
        }
      }
    }
  }

  void receive(State& s, const LocalView& view, Round r,
               std::span<const Delivery<Payload>> in) {
    for (const auto& msg : in) {
      const Weight w = *view.edge_to(msg.from).in_weight;
      const Label cand{msg.payload.d + w, msg.payload.l + 1};
      if (cand.hops > schedule_.h || cand.dist > schedule_.delta_cap) continue;
      Slot& slot = s.slots[static_cast<std::size_t>(index_[msg.payload.source])];
      if (mode_ == LabelMode::kSingle) {
        adopt_single(s, slot, cand, msg.from, r);
      } else {
        adopt_frontier(s, slot, cand, msg.from, r);
      }
    }
  }

  bool quiescent(const State& s, Round) const {
    for (const Slot& slot : s.slots) {
      if (slot.due >= 0) return false;
      for (const Pending& p : slot.frontier) {
        if (p.due >= 0) return false;
      }
    }
    return true;
  }

  int bit_size(const Payload& m) const {
    return label_bits(m, sources_.size() > 1);
  }

 private:
  Round slot_for(State& s, const Label& l, Round r) const {
    const Round due = schedule_.send_round(l.dist, l.hops);
    if (due > r) return due;
    ++s.late;
    return r + 1;
  }

  void adopt_single(State& s, Slot& slot, const Label& cand, NodeId from, Round r) {
    if (slot.label) {
      if (*slot.label < cand) return;
      if (*slot.label == cand) {
        if (slot.from && from < *slot.from) slot.from = from;
        return;
      }
    }
    slot.label = cand;
    slot.from = from;
    slot.arrival = r;
    slot.due = slot_for(s, cand, r);
    ++s.adoptions;
  }

  void adopt_frontier(State& s, Slot& slot, const Label& cand, NodeId from, Round r) {
    for (Pending& p : slot.frontier) {
      if (p.label.dist <= cand.dist && p.label.hops <= cand.hops) return;
    }
    std::erase_if(slot.frontier, [&](const Pending& p) {
      return cand.dist <= p.label.dist && cand.hops <= p.label.hops;
    });
    slot.frontier.push_back({cand, from, slot_for(s, cand, r), r});
    ++s.adoptions;
    refresh(slot);
  }

  // The node's answer is the lexicographically smallest frontier pair.
  static void refresh(Slot& slot) {
    const Pending* best = nullptr;
    for (const Pending& p : slot.frontier) {
      if (!best || p.label < best->label) best = &p;
    }
    if (!best) return;
    slot.label = best->label;
    slot.arrival = best->arrived;
    if (best->arrived >= 0) slot.from = best->from;
  }

  std::vector<NodeId> sources_;
  std::vector<std::vector<Distance>> seeds_;
  PipelineSchedule schedule_;
  LabelMode mode_;
  std::vector<int> index_;
};

struct ConfirmMsg {
  bool anchor = false;
  NodeId source = 0;
  Weight d = 0;
  std::int64_t l = 0;
};

class Confirm {
 public:
  struct Slot {
    MaybeLabel label;
    std::optional<NodeId> parent;
    bool member = false;
    bool announced = false;
  };
  struct State {
    std::vector<Slot> slots;
  };
  using Payload = ConfirmMsg;

  Confirm(const std::vector<NodeId>& sources,
          const std::vector<std::vector<MaybeLabel>>& labels, std::size_t n)
      : sources_(sources), labels_(labels), index_(index_sources(n, sources)) {}

  State init(const LocalView& view) {
    State s;
    s.slots.resize(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      s.slots[i].label = labels_[i][view.id()];
      s.slots[i].member = s.slots[i].label && s.slots[i].label->hops == 0;
    }
    return s;
  }

  void send(State& s, const LocalView&, Round r, Outbox<Payload>& out) {
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
      Slot& slot = s.slots[i];
      if (r == 0 && slot.label) {
        out.send_all({false, sources_[i], slot.label->dist, slot.label->hops});
      } else if (r > 0 && slot.member && !slot.announced) {
        out.send_all({true, sources_[i], 0, 0});
        slot.announced = true;
      }
    }
  }

  void receive(State& s, const LocalView& view, Round r,
               std::span<const Delivery<Payload>> in) {
    for (const auto& msg : in) {
      Slot& slot = s.slots[static_cast<std::size_t>(index_[msg.payload.source])];
      if (!msg.payload.anchor) {
        const Weight w = *view.edge_to(msg.from).in_weight;
        const Label chained{msg.payload.d + w, msg.payload.l + 1};
        if (!slot.member && !slot.parent && slot.label == chained) {
          slot.parent = msg.from;  // deliveries arrive in sender order
        }
      } else if (!slot.member && slot.parent == msg.from) {
        slot.member = true;
      }
    }
    (void)r;
  }

  bool quiescent(const State& s, Round r) const {
    if (r == 0) return false;
    for (const Slot& slot : s.slots) {
      if (slot.member && !slot.announced) return false;
    }
    return true;
  }

  int bit_size(const Payload& m) const {
    return 1 + bits_for(m.source) +
           (m.anchor ? 0 : bits_for(m.d) + bits_for(m.l));
  }

 private:
  const std::vector<NodeId>& sources_;
  const std::vector<std::vector<MaybeLabel>>& labels_;
  std::vector<int> index_;
};

EngineConfig directed_links(EngineConfig config) {
  config.links = LinkMode::kDirectedOut;
  return config;
}

PipelineResult run_pipeline(const WeightedGraph& g,
                            const std::vector<NodeId>& sources,
                            std::vector<std::vector<Distance>> seeds,
                            const PipelineSchedule& schedule, LabelMode mode,
                            const EngineConfig& config) {
  if (g.has_negative_weight()) {
    throw NegativeWeight("pipelined algorithms need nonnegative weights");
  }
  if (sources.empty()) throw InvalidArgument("need at least one source");
  Pipeline program(sources, std::move(seeds), schedule, mode, g.n());
  auto run = run_program(g, program, directed_links(config));

  PipelineResult result;
  result.schedule = schedule;
  result.metrics = run.metrics;
  std::vector<std::vector<MaybeLabel>> labels(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    SourceRun sr;
    sr.source = sources[i];
    for (const auto& st : run.states) {
      const auto& slot = st.slots[i];
      sr.labels.push_back(slot.label);
      sr.adopted_from.push_back(slot.from);
      sr.sends.push_back(slot.sends);
      sr.arrival.push_back(slot.arrival);
    }
    labels[i] = sr.labels;
    result.runs.push_back(std::move(sr));
  }
  for (const auto& st : run.states) {
    result.late_sends += st.late;
    result.adoptions += st.adoptions;
    result.last_send_round = std::max(result.last_send_round, st.last_send);
  }

  Confirmation confirmed = confirm_trees(g, sources, labels, config);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    result.runs[i].tree = std::move(confirmed.trees[i]);
  }
  result.phases = {{"pipeline", run.metrics}, {"confirm", confirmed.metrics}};
  return result;
}

}  // namespace

Confirmation confirm_trees(const WeightedGraph& g,
                           const std::vector<NodeId>& sources,
                           const std::vector<std::vector<MaybeLabel>>& labels,
                           const EngineConfig& config) {
  Confirm program(sources, labels, g.n());
  auto run = run_program(g, program, directed_links(config));
  Confirmation out;
  out.metrics = run.metrics;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    SpTree tree(g.n(), sources[i]);
    for (NodeId v = 0; v < g.n(); ++v) {
      const auto& slot = run.states[v].slots[i];
      if (!slot.member) continue;
      tree.set(v, {slot.label->dist, slot.label->hops, slot.parent});
    }
    out.trees.push_back(std::move(tree));
  }
  return out;
}

PipelineResult short_range(const WeightedGraph& g, NodeId source, std::int64_t h,
                           Weight delta_cap, LabelMode mode,
                           const EngineConfig& config) {
  auto schedule = PipelineSchedule::single_source(h, delta_cap);
  return run_pipeline(g, {source}, {}, schedule, mode, config);
}

PipelineResult short_range_extension(const WeightedGraph& g, NodeId source,
                                     std::int64_t h,
                                     const std::vector<Distance>& seeds,
                                     Weight delta_cap, LabelMode mode,
                                     const EngineConfig& config) {
  if (seeds.size() != g.n()) throw InvalidArgument("one seed per node expected");
  auto schedule = PipelineSchedule::single_source(h, delta_cap);
  return run_pipeline(g, {source}, {seeds}, schedule, mode, config);
}

PipelineResult multi_source_pipelined(const WeightedGraph& g,
                                      const std::vector<NodeId>& sources,
                                      std::int64_t h, Weight delta_cap,
                                      LabelMode mode, const EngineConfig& config) {
  auto schedule = PipelineSchedule::multi_source(
      h, static_cast<std::int64_t>(sources.size()), delta_cap);
  return run_pipeline(g, sources, {}, schedule, mode, config);
}

namespace {

class BellmanFord {
 public:
  struct State {
    std::vector<MaybeLabel> labels;
    std::vector<bool> changed;
  };
  using Payload = LabelMsg;

  BellmanFord(const std::vector<NodeId>& sources, std::int64_t h, std::size_t n)
      : sources_(sources), h_(h), index_(index_sources(n, sources)) {}

  State init(const LocalView& view) {
    State s{std::vector<MaybeLabel>(sources_.size()),
            std::vector<bool>(sources_.size(), false)};
    const int i = index_[view.id()];
    if (i >= 0) {
      s.labels[static_cast<std::size_t>(i)] = Label{0, 0};
      s.changed[static_cast<std::size_t>(i)] = true;
    }
    return s;
  }

  void send(State& s, const LocalView&, Round r, Outbox<Payload>& out) {
    if (r >= h_) return;
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      if (!s.changed[i]) continue;
      out.send_all({sources_[i], s.labels[i]->dist, s.labels[i]->hops});
      s.changed[i] = false;
    }
  }

  void receive(State& s, const LocalView& view, Round,
               std::span<const Delivery<Payload>> in) {
    for (const auto& msg : in) {
      const auto i = static_cast<std::size_t>(index_[msg.payload.source]);
      const Label cand{msg.payload.d + *view.edge_to(msg.from).in_weight,
                       msg.payload.l + 1};
      if (!s.labels[i] || cand < *s.labels[i]) {
        s.labels[i] = cand;
        s.changed[i] = true;
      }
    }
  }

  bool quiescent(const State& s, Round r) const {
    return r >= h_ ||
           std::none_of(s.changed.begin(), s.changed.end(), [](bool b) { return b; });
  }

  int bit_size(const Payload& m) const { return label_bits(m, true); }

 private:
  const std::vector<NodeId>& sources_;
  std::int64_t h_;
  std::vector<int> index_;
};

}  // namespace

BellmanFordRun distributed_bellman_ford(const WeightedGraph& g,
                                        const std::vector<NodeId>& sources,
                                        std::int64_t h,
                                        const EngineConfig& config,
                                        bool with_trees) {
  if (h < 0) throw InvalidHopBound("h must be >= 0");
  BellmanFord program(sources, h, g.n());
  auto run = run_program(g, program, directed_links(config));
  BellmanFordRun out;
  out.sources = sources;
  out.metrics = run.metrics;
  out.labels.assign(sources.size(), {});
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (const auto& st : run.states) out.labels[i].push_back(st.labels[i]);
  }
  for (const auto& st : run.states) {
    out.unsettled = out.unsettled || std::find(st.changed.begin(), st.changed.end(), true) != st.changed.end();
  }
  out.phases.push_back({"bellman-ford", run.metrics});
  if (with_trees) {
    Confirmation confirmed = confirm_trees(g, sources, out.labels, config);
    out.trees = std::move(confirmed.trees);
    out.phases.push_back({"confirm", confirmed.metrics});
  }
  return out;
}

}  // namespace congest
