#include "congest/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace congest {

std::size_t WeightedGraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& row : out_) total += row.size();
  return total;
}

bool WeightedGraph::has_negative_weight() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w < 0; });
}

WeightedGraph validate(EdgeList list) {
  WeightedGraph g;
  g.n_ = list.n;
  g.directed_ = list.directed;
  g.mode_ = list.mode;
  g.out_.assign(list.n, {});
  g.in_.assign(list.n, {});

  std::set<std::pair<NodeId, NodeId>> seen;
  auto add_arc = [&](NodeId u, NodeId v, Weight w) {
    if (!seen.emplace(u, v).second) {
      throw DuplicateEdge("duplicate edge " + std::to_string(u) + "->" +
                          std::to_string(v));
    }
    g.out_[u].push_back({v, w});
    g.in_[v].push_back({u, w});
  };

  for (const Edge& e : list.edges) {
    if (e.u >= list.n || e.v >= list.n) {
      throw NodeOutOfRange("edge endpoint out of range: " +
                           std::to_string(e.u) + "," + std::to_string(e.v));
    }
    if (e.u == e.v) throw SelfLoop("self loop at " + std::to_string(e.u));
    if (list.mode == WeightMode::kNonnegative && e.w < 0) {
      throw NegativeWeightInNonnegativeMode(
          "negative weight " + std::to_string(e.w) + " on " +
          std::to_string(e.u) + "->" + std::to_string(e.v));
    }
    add_arc(e.u, e.v, e.w);
    if (!list.directed) add_arc(e.v, e.u, e.w);
    g.max_abs_weight_ = std::max(g.max_abs_weight_, e.w < 0 ? -e.w : e.w);
    g.max_weight_ = std::max(g.max_weight_, e.w);
  }

  auto by_node = [](const Arc& a, const Arc& b) { return a.to < b.to; };
  for (auto& row : g.out_) std::sort(row.begin(), row.end(), by_node);
  for (auto& row : g.in_) std::sort(row.begin(), row.end(), by_node);

  g.edges_ = std::move(list.edges);
  if (!g.directed_) {
    for (Edge& e : g.edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return g;
}

std::vector<std::vector<NodeId>> underlying_undirected(const WeightedGraph& g) {
  std::vector<std::vector<NodeId>> adj(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    for (const Arc& a : g.out(v)) adj[v].push_back(a.to);
    for (const Arc& a : g.in(v)) adj[v].push_back(a.to);
    std::sort(adj[v].begin(), adj[v].end());
    adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
  }
  return adj;
}

void check_spec(const GeneratorSpec& spec) {
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw InvalidGeneratorSpec("edge probability must be in [0,1]");
  }
  if (!(spec.zero_fraction >= 0.0 && spec.zero_fraction <= 1.0)) {
    throw InvalidGeneratorSpec("zero fraction must be in [0,1]");
  }
  if (spec.weight_low > spec.weight_high) {
    throw InvalidGeneratorSpec("weight_low must not exceed weight_high");
  }
}

namespace {

class WeightDraw {
 public:
  WeightDraw(const GeneratorSpec& spec, std::mt19937_64& rng)
      : spec_(spec), rng_(rng) {}

  Weight operator()() {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (spec_.zero_fraction > 0.0 && coin(rng_) < spec_.zero_fraction) return 0;
    Weight low = spec_.weight_low;
    if (low >= 0) low = std::max<Weight>(1, low);
    // A [0,0] range with no positive option means all-zero weights.
    if (low > spec_.weight_high) return 0;
    std::uniform_int_distribution<Weight> pick(low, spec_.weight_high);
    return pick(rng_);
  }

 private:
  const GeneratorSpec& spec_;
  std::mt19937_64& rng_;
};

}  // namespace

WeightedGraph generate(const GeneratorSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  WeightDraw draw(spec, rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  EdgeList list;
  list.n = spec.n;
  list.directed = spec.directed;
  list.mode = spec.weight_low < 0 ? WeightMode::kArbitrary
                                  : WeightMode::kNonnegative;
  auto link = [&](NodeId u, NodeId v) {
    list.edges.push_back({u, v, draw()});
    if (spec.directed) list.edges.push_back({v, u, draw()});
  };
  const auto n = static_cast<NodeId>(spec.n);

  switch (spec.kind) {
    case GeneratorKind::kGnp:
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = spec.directed ? 0 : u + 1; v < n; ++v) {
          if (u == v) continue;
          if (coin(rng) < spec.edge_probability) {
            list.edges.push_back({u, v, draw()});
          }
        }
      }
      break;
    case GeneratorKind::kPath:
      for (NodeId u = 0; u + 1 < n; ++u) list.edges.push_back({u, u + 1, draw()});
      break;
    case GeneratorKind::kCycle:
      for (NodeId u = 0; u + 1 < n; ++u) list.edges.push_back({u, u + 1, draw()});
      if (n >= 3 || (n == 2 && spec.directed)) {
        list.edges.push_back({n - 1, 0, draw()});
      }
      break;
    case GeneratorKind::kGrid: {
      const auto side = static_cast<NodeId>(
          std::max<double>(1.0, std::ceil(std::sqrt(static_cast<double>(n)))));
      for (NodeId u = 0; u < n; ++u) {
        if ((u % side) + 1 < side && u + 1 < n) link(u, u + 1);
        if (u + side < n) link(u, u + side);
      }
      break;
    }
    case GeneratorKind::kLayered: {
      const auto width = static_cast<NodeId>(
          std::max<double>(1.0, std::round(std::sqrt(static_cast<double>(n)))));
      for (NodeId u = 0; u < n; ++u) {
        const NodeId next_layer = (u / width + 1) * width;
        for (NodeId v = next_layer; v < std::min<NodeId>(n, next_layer + width);
             ++v) {
          if (coin(rng) < spec.edge_probability) {
            list.edges.push_back({u, v, draw()});
          }
        }
      }
      break;
    }
  }
  return validate(std::move(list));
}

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "gnp") return GeneratorKind::kGnp;
  if (name == "path") return GeneratorKind::kPath;
  if (name == "cycle") return GeneratorKind::kCycle;
  if (name == "grid") return GeneratorKind::kGrid;
  if (name == "layered") return GeneratorKind::kLayered;
  throw InvalidGeneratorSpec("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kGnp: return "gnp";
    case GeneratorKind::kPath: return "path";
    case GeneratorKind::kCycle: return "cycle";
    case GeneratorKind::kGrid: return "grid";
    case GeneratorKind::kLayered: return "layered";
  }
  return "?";
}

void write_graph(std::ostream& os, const WeightedGraph& g) {
  os << "p " << g.n() << ' ' << g.edges().size() << ' '
     << (g.directed() ? 1 : 0) << ' '
     << (g.mode() == WeightMode::kNonnegative ? "nn" : "arb") << '\n';
  for (const Edge& e : g.edges()) {
    os << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  }
}

std::string serialize(const WeightedGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

WeightedGraph parse_graph(std::istream& is) {
  EdgeList list;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      int directed = -1;
      std::string mode;
      if (!(ls >> list.n >> declared_edges >> directed >> mode)) {
        fail("malformed header");
      }
      if (directed != 0 && directed != 1) fail("directed flag must be 0 or 1");
      if (mode == "nn") {
        list.mode = WeightMode::kNonnegative;
      } else if (mode == "arb") {
        list.mode = WeightMode::kArbitrary;
      } else {
        fail("weight mode must be nn or arb");
      }
      list.directed = directed == 1;
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before header");
      long long u = 0, v = 0, w = 0;
      if (!(ls >> u >> v >> w)) fail("malformed edge");
      if (u < 0 || v < 0) fail("negative node id");
      list.edges.push_back(
          {static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<Weight>(w)});
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#') fail("trailing tokens");
  }
  if (!have_header) throw ParseError("missing header line");
  if (list.edges.size() != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) +
                     " edges, found " + std::to_string(list.edges.size()));
  }
  return validate(std::move(list));
}

WeightedGraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

}  // namespace congest
