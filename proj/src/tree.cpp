#include "csg/tree.hpp"

#include <algorithm>

namespace csg {

SemigroupTree::SemigroupTree(CSemigroup root, EdgeKind kind)
    : root_(std::move(root)), kind_(kind) {
  nodes_.push_back(Node{});
}

int SemigroupTree::add_node(int parent, Point edge) {
  Node n;
  n.parent = parent;
  n.edge = std::move(edge);
  n.level = nodes_[static_cast<size_t>(parent)].level + 1;
  depth_ = std::max(depth_, n.level);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

std::vector<int> SemigroupTree::level_nodes(int level) const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].level == level) out.push_back(static_cast<int>(i));
  return out;
}

CSemigroup SemigroupTree::materialize(int i) const {
  std::vector<Point> path;
  for (int cur = i; cur != 0; cur = nodes_[static_cast<size_t>(cur)].parent)
    path.push_back(nodes_[static_cast<size_t>(cur)].edge);
  std::vector<Point> gaps = root_.gaps();
  const Context& c = root_.c();
  if (kind_ == EdgeKind::gap_removed) {
    for (const Point& x : path) gaps.erase(std::find(gaps.begin(), gaps.end(), x));
  } else {
    for (const Point& x : path)
      gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), x,
                                   [&](const Point& a, const Point& b) { return c.less(a, b); }),
                  x);
  }
  return CSemigroup::trusted(root_.ctx(), std::move(gaps));
}

}  // namespace csg
