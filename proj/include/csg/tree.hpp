#pragma once

#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

struct GenusRange {
  long long lo = 0;
  long long hi = 0;
  bool contains(long long g) const { return lo <= g && g <= hi; }
};

// Enumeration tree over semigroups sharing a root. Nodes store only the
// parent link and the single gap added (edge_kind gap_added: child gap set =
// parent's plus edge) or removed (gap_removed: child = parent minus edge);
// gap sets are reconstructed on demand from the root.
class SemigroupTree {
 public:
  enum class EdgeKind { gap_added, gap_removed };

  struct Node {
    int parent = -1;  // -1 for the root
    Point edge;       // empty for the root
    int level = 0;
  };

  SemigroupTree(CSemigroup root, EdgeKind kind);

  EdgeKind edge_kind() const { return kind_; }
  const CSemigroup& root() const { return root_; }
  size_t size() const { return nodes_.size(); }
  const Node& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  int depth() const { return depth_; }

  int add_node(int parent, Point edge);
  std::vector<int> level_nodes(int level) const;
  CSemigroup materialize(int i) const;

 private:
  CSemigroup root_;
  EdgeKind kind_;
  std::vector<Node> nodes_;
  int depth_ = 0;
};

}  // namespace csg
