#include "congest/csssp.hpp"

#include <algorithm>
#include <map>

#include "congest/pipelined.hpp"

namespace congest {

CsSspRun build_csssp(const WeightedGraph& g, std::vector<NodeId> sources,
                     std::int64_t h, Weight delta_cap, CsSspMethod method,
                     const EngineConfig& config) {
  if (h < 1) throw InvalidHopBound("h must be >= 1");
  std::sort(sources.begin(), sources.end());
  const std::int64_t hops = 2 * h;

  CsSspCollection wide{g.n(), hops, sources, {}};
  CsSspRun run;
  if (method == CsSspMethod::kPipelined) {
    PipelineResult p =
        multi_source_pipelined(g, sources, hops, delta_cap, LabelMode::kFrontier, config);
    for (SourceRun& r : p.runs) wide.trees[r.source] = std::move(r.tree);
    run.phases = std::move(p.phases);
  } else {
    BellmanFordRun b = distributed_bellman_ford(g, sources, hops, config, true);
    for (std::size_t i = 0; i < sources.size(); ++i) {
      wide.trees[sources[i]] = std::move(b.trees[i]);
    }
    run.phases = std::move(b.phases);
  }
  run.collection = truncate_to_h(wide, h);
  return run;
}

CsSspCollection truncate_to_h(const CsSspCollection& trees, std::int64_t h) {
  CsSspCollection out{trees.n, h, trees.sources, trees.trees};
  for (auto& [x, tree] : out.trees) {
    for (NodeId v : tree.members()) {
      if (tree.at(v).hops > h) tree.erase(v);
    }
  }
  return out;
}

namespace {

// `up[v]` is the unique neighbour of v on the side of `anchor`; every node
// must lead to the anchor without repeating.
void check_tree(const EdgeUnion& u, NodeId anchor,
                const std::map<NodeId, NodeId>& up, const char* kind) {
  for (NodeId v : u.nodes) {
    NodeId cur = v;
    std::size_t steps = 0;
    while (cur != anchor) {
      auto it = up.find(cur);
      if (it == up.end() || ++steps > u.nodes.size()) {
        throw NotATree(std::string("union is not an ") + kind + " at node " +
                       std::to_string(v));
      }
      cur = it->second;
    }
  }
}

}  // namespace

EdgeUnion subtree_out_tree(const CsSspCollection& c, NodeId root) {
  EdgeUnion u;
  for (const auto& [x, tree] : c.trees) {
    if (!tree.contains(root)) continue;
    u.nodes.insert(root);
    for (NodeId v : tree.members()) {
      if (v == root || !tree.is_ancestor(root, v)) continue;
      u.nodes.insert(v);
      u.edges.insert({*tree.at(v).parent, v});
    }
  }
  std::map<NodeId, NodeId> parent;
  for (auto [from, to] : u.edges) {
    if (to == root || !parent.emplace(to, from).second) {
      throw NotATree("node " + std::to_string(to) + " has two parents below " +
                     std::to_string(root));
    }
  }
  check_tree(u, root, parent, "out-tree");
  return u;
}

EdgeUnion paths_in_tree(const CsSspCollection& c, NodeId target) {
  EdgeUnion u;
  for (const auto& [x, tree] : c.trees) {
    if (!tree.contains(target)) continue;
    auto path = tree.path_from_root(target);
    u.nodes.insert(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) u.edges.insert({path[i], path[i + 1]});
  }
  std::map<NodeId, NodeId> next;
  for (auto [from, to] : u.edges) {
    if (from == target || !next.emplace(from, to).second) {
      throw NotATree("node " + std::to_string(from) + " has two successors toward " +
                     std::to_string(target));
    }
  }
  check_tree(u, target, next, "in-tree");
  return u;
}

}  // namespace congest
