#include "congest/rand_apsp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "congest/pipelined.hpp"
#include "congest/spanning.hpp"

namespace congest {

std::int64_t center_count(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InvalidArgument("n and k must be positive");
  const long double nn = static_cast<long double>(n);
  const long double value =
      std::cbrt(nn) * std::cbrt(static_cast<long double>(k)) * std::log(nn);
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(value)), 1,
                                  static_cast<std::int64_t>(n));
}

CenterSet sample_centers(std::size_t n, std::size_t k, std::uint64_t seed) {
  CenterSet out;
  out.q = center_count(n, k);
  out.seed = seed;
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out.centers),
              static_cast<std::ptrdiff_t>(out.q), rng);
  std::sort(out.centers.begin(), out.centers.end());
  return out;
}

std::int64_t center_hop_bound(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InvalidArgument("n and k must be positive");
  const long double nn = static_cast<long double>(n);
  const long double value = std::cbrt(nn * nn) / std::cbrt(static_cast<long double>(k));
  const auto top = std::max<std::int64_t>(1, static_cast<std::int64_t>(n) - 1);
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(value)), 1, top);
}

const std::vector<Distance>& RandApspResult::row(NodeId x) const {
  auto it = std::lower_bound(sources.begin(), sources.end(), x);
  if (it == sources.end() || *it != x) {
    throw InvalidArgument("node " + std::to_string(x) + " is not a source");
  }
  return rows[static_cast<std::size_t>(it - sources.begin())];
}

namespace {

std::size_t rank_in(const std::vector<NodeId>& sorted, NodeId x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                                  sorted.begin());
}

bool member(const std::vector<NodeId>& sorted, NodeId x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

RandApspResult run_randomized_apsp(const WeightedGraph& g, RandApspConfig config) {
  const std::size_t n = g.n();
  auto& s = config.sources;
  if (s.empty()) throw InvalidArgument("no sources");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.back() >= n) throw InvalidArgument("source out of range");

  RandApspResult out;
  out.sources = s;
  const std::size_t k = s.size();
  if (config.centers) {
    out.centers.centers = *config.centers;
    std::sort(out.centers.centers.begin(), out.centers.centers.end());
    out.centers.q = static_cast<std::int64_t>(out.centers.centers.size());
    out.centers.seed = config.seed;
  } else {
    out.centers = sample_centers(n, k, config.seed);
  }
  const std::vector<NodeId>& centers = out.centers.centers;
  out.h = config.h.value_or(center_hop_bound(n, k));
  if (out.h < 1) throw InvalidHopBound("h must be >= 1");

  // 1. h-hop Bellman-Ford from every source and center
  std::vector<NodeId> roots;
  std::set_union(s.begin(), s.end(), centers.begin(), centers.end(), std::back_inserter(roots));
  BellmanFordRun bf = distributed_bellman_ford(g, roots, out.h, config.engine, false);
  out.phases.push_back({"bellman-ford", bf.metrics});
  auto hop_dist = [&](NodeId from, NodeId at) -> Distance {
    const MaybeLabel& l = bf.labels[rank_in(roots, from)][at];
    return l ? Distance(l->dist) : Distance();
  };
  for (NodeId r : roots) {
    if (hop_dist(r, r) < Distance(0)) throw NegativeCycle("negative closed walk at " + std::to_string(r));
  }
  if (g.has_negative_weight()) {
    // an estimate that still drops at hop n can only come from a negative cycle
    BellmanFordRun check = distributed_bellman_ford(
        g, roots, static_cast<std::int64_t>(n), config.engine, false);
    out.phases.push_back({"cycle-check", check.metrics});
    if (check.unsettled) throw NegativeCycle("estimates still improve at hop n");
  }

  ForestRun forest = build_bfs_forest(g, config.engine);
  for (const Phase& p : forest.phases) out.phases.push_back(p);

  // 2. every center announces its h-hop distance from every other center
  std::vector<std::vector<Item>> overlay(n);
  for (NodeId c2 : centers) {
    for (NodeId c1 : centers) {
      Distance d = hop_dist(c1, c2);
      if (c1 != c2 && d.finite()) overlay[c2].push_back({c1, c2, d.value()});
    }
  }
  BroadcastRun cast2 = broadcast_items(g, forest.forest, overlay, config.engine);
  out.phases.push_back({"overlay-broadcast", cast2.metrics});

  // 3. centers announce h-hop distances from the sources that are not centers
  std::vector<std::vector<Item>> reach(n);
  for (NodeId c : centers) {
    for (NodeId x : s) {
      Distance d = hop_dist(x, c);
      if (!member(centers, x) && d.finite()) reach[c].push_back({x, c, d.value()});
    }
  }
  BroadcastRun cast3 = broadcast_items(g, forest.forest, reach, config.engine);
  out.phases.push_back({"source-broadcast", cast3.metrics});

  // local step: each component's nodes hold the same items, so the closure
  // and the source-to-center table are computed once per component
  const std::size_t q = centers.size();
  out.rows.assign(k, std::vector<Distance>(n));
  std::map<NodeId, std::vector<std::vector<Distance>>> via;  // root -> [x][c2]
  for (NodeId root : forest.forest.roots()) {
    std::vector<std::vector<Distance>> d(q, std::vector<Distance>(q));
    for (std::size_t i = 0; i < q; ++i) d[i][i] = Distance(0);
    for (const Item& it : cast2.known[root]) {
      auto& cell = d[rank_in(centers, static_cast<NodeId>(it[0]))]
                    [rank_in(centers, static_cast<NodeId>(it[1]))];
      cell = std::min(cell, Distance(it[2]));
    }
    for (std::size_t m = 0; m < q; ++m) {
      for (std::size_t i = 0; i < q; ++i) {
        if (d[i][m].is_infinite()) continue;
        for (std::size_t j = 0; j < q; ++j) d[i][j] = std::min(d[i][j], d[i][m].plus(d[m][j]));
      }
    }
    for (std::size_t i = 0; i < q; ++i) {
      if (d[i][i] < Distance(0)) {
        throw NegativeCycle("negative cycle through center " + std::to_string(centers[i]));
      }
    }
    std::vector<std::vector<Distance>> first(k, std::vector<Distance>(q));
    for (std::size_t xi = 0; xi < k; ++xi) {
      if (member(centers, s[xi])) {
        const std::size_t ci = rank_in(centers, s[xi]);
        first[xi][ci] = Distance(0);
      }
    }
    auto note = [&](const Item& it) {
      const auto x = static_cast<NodeId>(it[0]);
      if (!member(s, x)) return;
      auto& cell = first[rank_in(s, x)][rank_in(centers, static_cast<NodeId>(it[1]))];
      cell = std::min(cell, Distance(it[2]));
    };
    for (const Item& it : cast2.known[root]) note(it);
    for (const Item& it : cast3.known[root]) note(it);
    auto& table = via[root];
    table.assign(k, std::vector<Distance>(q));
    for (std::size_t xi = 0; xi < k; ++xi) {
      for (std::size_t a = 0; a < q; ++a) {
        if (first[xi][a].is_infinite()) continue;
        for (std::size_t b = 0; b < q; ++b) {
          table[xi][b] = std::min(table[xi][b], first[xi][a].plus(d[a][b]));
        }
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    const auto& table = via.at(forest.forest.root[v]);
    for (std::size_t xi = 0; xi < k; ++xi) {
      Distance best = hop_dist(s[xi], v);
      for (std::size_t b = 0; b < q; ++b) {
        best = std::min(best, table[xi][b].plus(hop_dist(centers[b], v)));
      }
      out.rows[xi][v] = best;
    }
  }
  out.phases.push_back({"combine", {}});
  return out;
}

}  // namespace congest
