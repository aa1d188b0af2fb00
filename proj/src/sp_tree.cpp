#include "congest/sp_tree.hpp"

#include <algorithm>
#include <sstream>

namespace congest {

SpTree::SpTree(std::size_t n, NodeId root) : root_(root), entries_(n) {
  entries_.at(root) = TreeEntry{0, 0, std::nullopt};
}

const TreeEntry& SpTree::at(NodeId v) const {
  if (!contains(v)) {
    throw InvalidArgument("node " + std::to_string(v) + " not in tree of " +
                          std::to_string(root_));
  }
  return *entries_[v];
}

std::vector<NodeId> SpTree::members() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < entries_.size(); ++v) {
    if (entries_[v]) out.push_back(v);
  }
  return out;
}

std::size_t SpTree::size() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [](const auto& e) { return e.has_value(); }));
}

std::int64_t SpTree::depth() const {
  std::int64_t d = 0;
  for (const auto& e : entries_) {
    if (e) d = std::max(d, e->hops);
  }
  return d;
}

std::vector<NodeId> SpTree::children(NodeId v) const {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < entries_.size(); ++u) {
    if (entries_[u] && entries_[u]->parent == v) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> SpTree::path_from_root(NodeId v) const {
  std::vector<NodeId> path;
  std::optional<NodeId> cur = v;
  while (cur) {
    path.push_back(*cur);
    if (path.size() > entries_.size()) {
      throw NotATree("cycle through node " + std::to_string(v));
    }
    cur = at(*cur).parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool SpTree::is_ancestor(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  for (NodeId x : path_from_root(v)) {
    if (x == u) return true;
  }
  return false;
}

std::string serialize(const CsSspCollection& c) {
  std::ostringstream os;
  os << "h " << c.n << ' ' << c.h << '\n';
  for (const auto& [source, tree] : c.trees) {
    os << "t " << source << '\n';
    for (NodeId v : tree.members()) {
      const TreeEntry& e = tree.at(v);
      os << "v " << v << ' '
         << (e.parent ? static_cast<long long>(*e.parent) : -1LL) << ' '
         << e.dist << ' ' << e.hops << '\n';
    }
  }
  return os.str();
}

CsSspCollection parse_collection(std::istream& is) {
  CsSspCollection c;
  bool have_header = false;
  SpTree* current = nullptr;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "h") {
      if (!(ls >> c.n >> c.h)) throw ParseError("bad collection header");
      have_header = true;
    } else if (tag == "t") {
      NodeId s = 0;
      if (!have_header || !(ls >> s) || s >= c.n) {
        throw ParseError("bad tree line: " + line);
      }
      c.sources.push_back(s);
      current = &(c.trees[s] = SpTree(c.n, s));
    } else if (tag == "v") {
      long long v = 0, parent = 0;
      TreeEntry e;
      if (!current || !(ls >> v >> parent >> e.dist >> e.hops) || v < 0 ||
          static_cast<std::size_t>(v) >= c.n) {
        throw ParseError("bad vertex line: " + line);
      }
      if (parent >= 0) e.parent = static_cast<NodeId>(parent);
      current->set(static_cast<NodeId>(v), e);
    } else {
      throw ParseError("unknown collection record: " + line);
    }
  }
  if (!have_header) throw ParseError("missing collection header");
  std::sort(c.sources.begin(), c.sources.end());
  return c;
}

CsSspCollection parse_collection(const std::string& text) {
  std::istringstream is(text);
  return parse_collection(is);
}

}  // namespace congest
