#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "congest/types.hpp"

namespace congest {

enum class WeightMode { kNonnegative, kArbitrary };

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId to = 0;
  Weight w = 0;
};

// Unvalidated input to `validate`.
struct EdgeList {
  std::size_t n = 0;
  bool directed = true;
  WeightMode mode = WeightMode::kNonnegative;
  std::vector<Edge> edges;
};

// Validated, immutable weighted graph. For undirected graphs every edge is
// stored once in `edges()` and contributes an arc in both directions.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t n() const { return n_; }
  bool directed() const { return directed_; }
  WeightMode mode() const { return mode_; }
  std::span<const Edge> edges() const { return edges_; }

  // Arcs leaving / entering `v`, sorted by the other endpoint.
  std::span<const Arc> out(NodeId v) const { return out_[v]; }
  std::span<const Arc> in(NodeId v) const { return in_[v]; }

  std::size_t arc_count() const;
  Weight max_abs_weight() const { return max_abs_weight_; }
  // Largest weight (0 for an edgeless graph); "lambda".
  Weight max_weight() const { return max_weight_; }
  bool has_negative_weight() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.mode_ == b.mode_ &&
           a.edges_ == b.edges_;
  }

 private:
  friend WeightedGraph validate(EdgeList list);

  std::size_t n_ = 0;
  bool directed_ = true;
  WeightMode mode_ = WeightMode::kNonnegative;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  Weight max_abs_weight_ = 0;
  Weight max_weight_ = 0;
};

// Checks endpoint range, self loops, duplicate directed edges and the weight
// sign rule, then returns the normalized (edge-sorted) graph.
WeightedGraph validate(EdgeList list);

// Communication adjacency: u ~ v iff (u,v) or (v,u) is an edge. Rows sorted.
std::vector<std::vector<NodeId>> underlying_undirected(const WeightedGraph& g);

enum class GeneratorKind { kGnp, kPath, kCycle, kGrid, kLayered };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kGnp;
  std::size_t n = 0;
  double edge_probability = 0.0;
  Weight weight_low = 1;
  Weight weight_high = 1;  // lambda
  double zero_fraction = 0.0;
  std::uint64_t seed = 0;
  bool directed = true;
};

// Throws InvalidGeneratorSpec on out-of-range parameters.
void check_spec(const GeneratorSpec& spec);

// Deterministic in its argument. In nonnegative mode (weight_low >= 0) a
// zero_fraction share of edges gets weight 0 and the rest are uniform in
// [max(1, weight_low), weight_high]; with weight_low < 0 the graph is in
// arbitrary mode and non-zero weights are uniform in [weight_low, weight_high].
WeightedGraph generate(const GeneratorSpec& spec);

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

// Line-oriented edge-list format:
//   p <n> <m> <directed:0|1> <nn|arb>
//   e <u> <v> <w>      (m lines)
// Blank lines and lines starting with '#' are ignored.
std::string serialize(const WeightedGraph& g);
void write_graph(std::ostream& os, const WeightedGraph& g);
WeightedGraph parse_graph(std::istream& is);
WeightedGraph parse_graph(const std::string& text);
WeightedGraph load_graph(const std::string& path);

}  // namespace congest
