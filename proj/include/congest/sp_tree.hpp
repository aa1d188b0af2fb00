#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congest/types.hpp"

namespace congest {

struct TreeEntry {
  Weight dist = 0;
  std::int64_t hops = 0;
  std::optional<NodeId> parent;

  Label label() const { return {dist, hops}; }
  friend bool operator==(const TreeEntry&, const TreeEntry&) = default;
};

// Rooted shortest-path tree over nodes [0, n). Absent nodes are not members.
class SpTree {
 public:
  SpTree() = default;
  SpTree(std::size_t n, NodeId root);

  NodeId root() const { return root_; }
  std::size_t n() const { return entries_.size(); }
  bool contains(NodeId v) const { return v < entries_.size() && entries_[v].has_value(); }
  const TreeEntry& at(NodeId v) const;
  void set(NodeId v, TreeEntry e) { entries_.at(v) = e; }
  void erase(NodeId v) { entries_.at(v).reset(); }

  std::vector<NodeId> members() const;
  std::size_t size() const;
  std::int64_t depth() const;
  // Members whose parent is v, ascending.
  std::vector<NodeId> children(NodeId v) const;
  // root, ..., v
  std::vector<NodeId> path_from_root(NodeId v) const;
  // True when u lies on the root path of v (u == v counts).
  bool is_ancestor(NodeId u, NodeId v) const;

  friend bool operator==(const SpTree&, const SpTree&) = default;

 private:
  NodeId root_ = 0;
  std::vector<std::optional<TreeEntry>> entries_;
};

struct CsSspCollection {
  std::size_t n = 0;
  std::int64_t h = 0;
  std::vector<NodeId> sources;  // ascending
  std::map<NodeId, SpTree> trees;

  friend bool operator==(const CsSspCollection&, const CsSspCollection&) = default;
};

// Line format:
//   h <n> <hop_bound>
//   t <source>                          (one block per tree)
//   v <node> <parent|-1> <dist> <hops>
std::string serialize(const CsSspCollection& c);
CsSspCollection parse_collection(std::istream& is);
CsSspCollection parse_collection(const std::string& text);

}  // namespace congest
