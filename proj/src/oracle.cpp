#include "congest/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace congest {

namespace {

std::optional<NodeId> chaining_parent(const WeightedGraph& g,
                                      const std::vector<MaybeLabel>& labels,
                                      NodeId v) {
  for (const Arc& a : g.in(v)) {  // ascending source ID
    if (labels[a.to] && labels[a.to]->extend(a.w) == labels[v]) return a.to;
  }
  return std::nullopt;
}

std::string pair_name(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

DistanceMatrix dijkstra_apsp(const WeightedGraph& g) {
  if (g.has_negative_weight()) {
    throw NegativeWeight("dijkstra_apsp needs nonnegative weights");
  }
  const std::size_t n = g.n();
  DistanceMatrix out(n);
  using Item = std::pair<Label, NodeId>;
  for (NodeId s = 0; s < n; ++s) {
    std::vector<MaybeLabel> label(n);
    std::vector<bool> done(n, false);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    label[s] = Label{0, 0};
    pq.push({{0, 0}, s});
    while (!pq.empty()) {
      auto [l, v] = pq.top();
      pq.pop();
      if (done[v]) continue;
      done[v] = true;
      for (const Arc& a : g.out(v)) {
        Label cand = l.extend(a.w);
        if (!label[a.to] || cand < *label[a.to]) {
          label[a.to] = cand;
          pq.push({cand, a.to});
        }
      }
    }
    for (NodeId t = 0; t < n; ++t) {
      if (!label[t]) continue;
      out.set(s, t, Distance(label[t]->dist));
      if (t != s) out.set_parent(s, t, chaining_parent(g, label, t));
    }
  }
  return out;
}

std::vector<MaybeLabel> bellman_ford_oracle(const WeightedGraph& g, NodeId s,
                                            std::int64_t max_hops) {
  if (max_hops < 0) throw InvalidHopBound("max_hops must be >= 0");
  const auto n = static_cast<std::int64_t>(g.n());
  std::vector<MaybeLabel> label(g.n());
  label[s] = Label{0, 0};
  auto step = [&](const std::vector<MaybeLabel>& cur) {
    std::vector<MaybeLabel> next = cur;
    for (const Edge& e : g.edges()) {
      auto relax = [&](NodeId u, NodeId v) {
        if (!cur[u]) return;
        Label cand = cur[u]->extend(e.w);
        if (!next[v] || cand < *next[v]) next[v] = cand;
      };
      relax(e.u, e.v);
      if (!g.directed()) relax(e.v, e.u);
    }
    return next;
  };
  const std::int64_t steps = max_hops >= n ? n - 1 : max_hops;
  for (std::int64_t i = 0; i < steps; ++i) label = step(label);
  if (max_hops >= n) {
    auto extra = step(label);
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (extra[v] && (!label[v] || extra[v]->dist < label[v]->dist)) {
        throw NegativeCycle("negative cycle reachable from " +
                            std::to_string(s));
      }
    }
  }
  return label;
}

DistanceMatrix bellman_ford_apsp(const WeightedGraph& g) {
  DistanceMatrix out(g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    auto label = bellman_ford_oracle(g, s, static_cast<std::int64_t>(g.n()));
    for (NodeId t = 0; t < g.n(); ++t) {
      if (!label[t]) continue;
      out.set(s, t, Distance(label[t]->dist));
      if (t != s) out.set_parent(s, t, chaining_parent(g, label, t));
    }
  }
  return out;
}

HopBoundedRow hop_bounded_sssp(const WeightedGraph& g, NodeId s, std::int64_t h) {
  if (h < 0) throw InvalidHopBound("h must be >= 0");
  HopBoundedRow row{bellman_ford_oracle(g, s, h), SpTree(g.n(), s)};
  std::vector<NodeId> order;
  for (NodeId v = 0; v < g.n(); ++v) {
    if (v != s && row.labels[v]) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return row.labels[a]->hops < row.labels[b]->hops;
  });
  for (NodeId v : order) {
    auto p = chaining_parent(g, row.labels, v);
    if (p && row.tree.contains(*p)) {
      row.tree.set(v, {row.labels[v]->dist, row.labels[v]->hops, p});
    }
  }
  return row;
}

Distance HopBoundedTable::dist(NodeId s, NodeId t) const {
  const MaybeLabel& l = rows.at(s).labels.at(t);
  return l ? Distance(l->dist) : Distance::infinity();
}

HopBoundedTable hop_bounded_apsp(const WeightedGraph& g, std::int64_t h) {
  HopBoundedTable table{h, {}};
  for (NodeId s = 0; s < g.n(); ++s) table.rows.push_back(hop_bounded_sssp(g, s, h));
  return table;
}

std::vector<bool> short_path_domain(const WeightedGraph& g, NodeId s,
                                    std::int64_t h, Weight delta_cap) {
  auto full = bellman_ford_oracle(
      g, s, std::max<std::int64_t>(0, static_cast<std::int64_t>(g.n()) - 1));
  std::vector<bool> in(g.n(), false);
  for (NodeId v = 0; v < g.n(); ++v) {
    in[v] = full[v] && full[v]->hops <= h && full[v]->dist <= delta_cap;
  }
  return in;
}

std::vector<Distance> seeded_hop_bounded(const WeightedGraph& g,
                                         const std::vector<Distance>& seeds,
                                         std::int64_t h) {
  std::vector<Distance> cur = seeds;
  for (std::int64_t i = 0; i < h; ++i) {
    std::vector<Distance> next = cur;
    for (NodeId u = 0; u < g.n(); ++u) {
      for (const Arc& a : g.out(u)) next[a.to] = min(next[a.to], cur[u].plus(a.w));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::vector<bool>> zero_weight_closure(const WeightedGraph& g) {
  std::vector<std::vector<bool>> reach(g.n(), std::vector<bool>(g.n(), false));
  for (NodeId s = 0; s < g.n(); ++s) {
    std::vector<NodeId> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const Arc& a : g.out(v)) {
        if (a.w == 0 && !reach[s][a.to]) {
          reach[s][a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
  }
  return reach;
}

Verdict verify_blocker(const CsSspCollection& c, std::int64_t h,
                       std::span<const NodeId> q) {
  std::set<NodeId> blockers(q.begin(), q.end());
  Verdict verdict;
  for (const auto& [x, tree] : c.trees) {
    for (NodeId v : tree.members()) {
      if (tree.at(v).hops != h) continue;
      auto path = tree.path_from_root(v);
      bool hit = std::any_of(path.begin(), path.end(),
                             [&](NodeId u) { return blockers.count(u) > 0; });
      if (!hit) {
        verdict.violations.push_back("tree " + std::to_string(x) +
                                     ": path to " + std::to_string(v) +
                                     " has no blocker");
      }
    }
  }
  return verdict;
}

Verdict verify_csssp(const WeightedGraph& g, const CsSspCollection& c) {
  Verdict verdict;
  auto fail = [&](std::string what) { verdict.violations.push_back(std::move(what)); };
  std::map<std::pair<NodeId, NodeId>, std::pair<NodeId, std::vector<NodeId>>> seen;

  for (const auto& [x, tree] : c.trees) {
    const std::string where = "tree " + std::to_string(x) + ": ";
    if (tree.root() != x || !tree.contains(x) ||
        tree.at(x) != TreeEntry{0, 0, std::nullopt}) {
      fail(where + "bad root entry");
      continue;
    }
    const HopBoundedRow oracle = hop_bounded_sssp(g, x, c.h);
    bool structured = true;
    for (NodeId v : tree.members()) {
      if (v == x) continue;
      const TreeEntry& e = tree.at(v);
      if (!e.parent || !tree.contains(*e.parent)) {
        fail(where + "node " + std::to_string(v) + " has no parent in tree");
        structured = false;
        continue;
      }
      const TreeEntry& p = tree.at(*e.parent);
      std::optional<Weight> w;
      for (const Arc& a : g.out(*e.parent)) {
        if (a.to == v) w = a.w;
      }
      if (!w) {
        fail(where + "edge " + pair_name(*e.parent, v) + " not in graph");
        structured = false;
        continue;
      }
      if (e.dist != p.dist + *w || e.hops != p.hops + 1 || e.hops > c.h) {
        fail(where + "entry of " + std::to_string(v) + " does not chain");
      }
      if (oracle.labels[v] != e.label()) {
        fail(where + "entry of " + std::to_string(v) +
             " is not the h-hop shortest label");
      }
    }
    if (!structured) continue;

    auto full = bellman_ford_oracle(
        g, x, std::max<std::int64_t>(0, static_cast<std::int64_t>(g.n()) - 1));
    for (NodeId v = 0; v < g.n(); ++v) {
      if (full[v] && full[v]->hops <= c.h && !tree.contains(v)) {
        fail(where + "missing " + std::to_string(v) +
             " whose shortest path has <= h hops");
      }
    }

    for (NodeId v : tree.members()) {
      std::vector<NodeId> path;
      try {
        path = tree.path_from_root(v);
      } catch (const NotATree&) {
        fail(where + "cycle at " + std::to_string(v));
        continue;
      }
      for (std::size_t i = 0; i < path.size(); ++i) {
        std::vector<NodeId> sub(path.begin() + static_cast<std::ptrdiff_t>(i),
                                path.end());
        auto key = std::make_pair(path[i], v);
        auto it = seen.find(key);
        if (it == seen.end()) {
          seen.emplace(key, std::make_pair(x, std::move(sub)));
        } else if (it->second.second != sub) {
          fail("pair " + pair_name(path[i], v) + ": trees " +
               std::to_string(it->second.first) + " and " + std::to_string(x) +
               " disagree");
        }
      }
    }
  }
  return verdict;
}

std::vector<std::vector<std::int64_t>> recount_scores(
    const CsSspCollection& c, std::span<const NodeId> q) {
  std::set<NodeId> blockers(q.begin(), q.end());
  std::vector<std::vector<std::int64_t>> score(
      c.sources.size(), std::vector<std::int64_t>(c.n, 0));
  for (std::size_t i = 0; i < c.sources.size(); ++i) {
    const SpTree& tree = c.trees.at(c.sources[i]);
    for (NodeId leaf : tree.members()) {
      if (tree.at(leaf).hops != c.h) continue;
      auto path = tree.path_from_root(leaf);
      if (std::any_of(path.begin(), path.end(),
                      [&](NodeId u) { return blockers.count(u) > 0; })) {
        continue;
      }
      for (NodeId u : path) ++score[i][u];
    }
  }
  return score;
}

}  // namespace congest
