#include "doctest.h"

#include <queue>
#include <set>

#include "congest/spanning.hpp"
#include "support.hpp"

using namespace congest;
using namespace support;

namespace {

std::vector<std::int64_t> bfs_depth(const WeightedGraph& g, NodeId s) {
  auto adj = underlying_undirected(g);
  std::vector<std::int64_t> d(g.n(), -1);
  std::queue<NodeId> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (NodeId u : adj[v]) {
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push(u);
      }
    }
  }
  return d;
}

}  // namespace

TEST_CASE("bfs forest") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    WeightedGraph g = random_graph(30, 0.04 + 0.01 * static_cast<double>(seed % 5), seed);
    ForestRun run = build_bfs_forest(g);
    const SpanningForest& f = run.forest;
    auto adj = underlying_undirected(g);
    for (NodeId v = 0; v < g.n(); ++v) {
      const NodeId r = f.root[v];
      auto d = bfs_depth(g, r);
      CHECK(d[v] == f.depth[v]);
      // the root is the smallest ID that reaches v
      for (NodeId u = 0; u < r; ++u) CHECK(bfs_depth(g, u)[v] < 0);
      if (f.parent[v]) {
        CHECK(std::binary_search(adj[v].begin(), adj[v].end(), *f.parent[v]));
        CHECK(f.depth[*f.parent[v]] == f.depth[v] - 1);
        const auto& sib = f.children[*f.parent[v]];
        CHECK(std::find(sib.begin(), sib.end(), v) != sib.end());
      } else {
        CHECK(r == v);
      }
    }
  }
  ForestRun fr = build_bfs_forest(fig1());
  CHECK(fr.forest.roots() == std::vector<NodeId>{0});
  CHECK(fr.forest.depth == std::vector<std::int64_t>{0, 1, 2, 2});
  CHECK(fr.forest.children[B] == std::vector<NodeId>{C, D});
}

TEST_CASE("component max") {
  WeightedGraph g = fig1();
  ForestRun fr = build_bfs_forest(g);
  MaxRun m = component_max(g, fr.forest, {1, 2, 1, 2});
  for (const auto& w : m.winner) {
    CHECK(w.value == 2);
    CHECK(w.id == B);
  }
  CHECK(m.metrics.rounds <= 2 * fr.forest.height() + 1);

  WeightedGraph split = validate({5, true, {}, {{0, 1, 1}, {3, 2, 1}, {4, 3, 1}}});
  ForestRun sf = build_bfs_forest(split);
  CHECK(sf.forest.roots() == std::vector<NodeId>{0, 2});
  MaxRun sm = component_max(split, sf.forest, {0, 3, 5, 5, 9});
  CHECK(sm.winner[0].id == 1);
  CHECK(sm.winner[1].id == 1);
  CHECK(sm.winner[2].id == 4);
  CHECK(sm.winner[3].value == 9);
}

TEST_CASE("broadcast items") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    WeightedGraph g = random_graph(25, 0.05 + 0.02 * static_cast<double>(seed % 4), seed);
    ForestRun fr = build_bfs_forest(g);
    std::vector<std::vector<Item>> origin(g.n());
    std::map<NodeId, std::set<Item>> per_root;
    std::size_t total = 0;
    for (NodeId v = 0; v < g.n(); v += 3) {
      for (std::int64_t j = 0; j < 3; ++j) {
        Item it{v, j, -static_cast<std::int64_t>(seed)};
        origin[v].push_back(it);
        per_root[fr.forest.root[v]].insert(it);
        ++total;
      }
    }
    BroadcastRun b = broadcast_items(g, fr.forest, origin);
    for (NodeId v = 0; v < g.n(); ++v) {
      const auto& want = per_root[fr.forest.root[v]];
      CHECK(b.known[v] == std::vector<Item>(want.begin(), want.end()));
    }
    CHECK(b.metrics.rounds <= static_cast<Round>(total) + 2 * fr.forest.height() + 1);
    CHECK(b.metrics.congestion() <= static_cast<std::int64_t>(total));

    EngineConfig fifo;
    fifo.bandwidth = BandwidthMode::kFifo;
    BroadcastRun bf = broadcast_items(g, fr.forest, origin, fifo);
    CHECK(bf.known == b.known);
    CHECK(bf.metrics.rounds == b.metrics.rounds);
  }
}
