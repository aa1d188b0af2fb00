#pragma once

#include "congest/graph.hpp"
#include "congest/sp_tree.hpp"

namespace support {

using namespace congest;

constexpr NodeId A = 0, B = 1, C = 2, D = 3;

inline WeightedGraph fig1() { return load_graph(FIXTURE_DIR "/fig1.graph"); }

inline SpTree tree_of(NodeId root,
                      std::initializer_list<std::pair<NodeId, TreeEntry>> rest) {
  SpTree t(4, root);
  for (const auto& [v, e] : rest) t.set(v, e);
  return t;
}

// The consistent 2-hop collection for sources {a, b}.
inline CsSspCollection fig1_csssp() {
  CsSspCollection c{4, 2, {A, B}, {}};
  c.trees[A] = tree_of(A, {{B, {1, 1, A}}, {D, {2, 2, B}}});
  c.trees[B] = tree_of(B, {{D, {1, 1, B}}, {C, {2, 2, D}}});
  return c;
}

// The independent 2-hop shortest-path trees for {a, b}; T_a uses edge (b,c).
inline CsSspCollection fig1_raw_trees() {
  CsSspCollection c{4, 2, {A, B}, {}};
  c.trees[A] = tree_of(A, {{B, {1, 1, A}}, {D, {2, 2, B}}, {C, {9, 2, B}}});
  c.trees[B] = tree_of(B, {{D, {1, 1, B}}, {C, {2, 2, D}}});
  return c;
}

inline WeightedGraph random_graph(std::size_t n, double p, std::uint64_t seed,
                                  Weight low = 0, Weight high = 10,
                                  double zero_fraction = 0.2) {
  return generate({GeneratorKind::kGnp, n, p, low, high, zero_fraction, seed});
}

}  // namespace support
