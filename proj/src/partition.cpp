#include "csg/partition.hpp"

#include <algorithm>

#include "csg/boxed.hpp"
#include "csg/error.hpp"

namespace csg {

bool same_box_closure(const CSemigroup& a, const CSemigroup& b) {
  if (a.frobenius() != b.frobenius())
    fail(Errc::frobenius_mismatch, show(a.frobenius()) + " vs " + show(b.frobenius()));
  return box_closure(a) == box_closure(b);
}

Point max_outer_gap(const CSemigroup& s) {
  const Point& f = s.frobenius();
  const Context& c = s.c();
  for (auto it = s.gaps().rbegin(); it != s.gaps().rend(); ++it)
    if (!c.in_cone(sub(f, *it))) return *it;
  return zero_point(c.dim());
}

std::vector<Point> class_child_edges(const CSemigroup& t, const Point& f) {
  const Context& c = t.c();
  Point lam = max_outer_gap(t);
  std::vector<Point> out;
  for (const Point& x : minimal_generators(t)) {
    if (!c.less(lam, x) || !c.less(x, f)) continue;
    if (c.in_cone(sub(f, x))) continue;  // stay outside the box
    out.push_back(x);
  }
  return out;
}

SemigroupTree closure_class_tree(const CSemigroup& s, Exec exec) {
  const Point f = s.frobenius();
  SemigroupTree tree(box_closure(s), SemigroupTree::EdgeKind::gap_added);
  const Context& c = s.c();
  struct Item {
    int id;
    CSemigroup sg;
  };
  struct Child {
    int pid;
    Point edge;
    CSemigroup sg;
  };
  std::vector<Item> frontier{{0, tree.root()}};
  while (!frontier.empty()) {
    std::vector<Child> kids = ordered_flat_map<Child>(
        frontier.size(),
        [&](size_t i) {
          const Item& it = frontier[i];
          std::vector<Child> ch;
          for (const Point& x : class_child_edges(it.sg, f)) {
            std::vector<Point> gaps = it.sg.gaps();
            gaps.insert(
                std::upper_bound(gaps.begin(), gaps.end(), x,
                                 [&](const Point& a, const Point& b) { return c.less(a, b); }),
                x);
            ch.push_back(Child{it.id, x, CSemigroup::trusted(it.sg.ctx(), std::move(gaps))});
          }
          return ch;
        },
        exec);
    std::vector<Item> next;
    next.reserve(kids.size());
    for (Child& ch : kids)
      next.push_back(Item{tree.add_node(ch.pid, std::move(ch.edge)), std::move(ch.sg)});
    frontier = std::move(next);
  }
  return tree;
}

std::vector<CSemigroup> enumerate_frobenius(const Ctx& ctx, const Point& f, Exec exec) {
  // Disjoint union of the closure classes of all boxed roots with Frobenius f.
  SemigroupTree roots = boxed_tree(ctx, f, exec);
  std::vector<CSemigroup> out = ordered_flat_map<CSemigroup>(
      roots.size(),
      [&](size_t i) {
        SemigroupTree cls = closure_class_tree(roots.materialize(static_cast<int>(i)),
                                               Exec::serial);
        std::vector<CSemigroup> members;
        members.reserve(cls.size());
        for (size_t j = 0; j < cls.size(); ++j)
          members.push_back(cls.materialize(static_cast<int>(j)));
        return members;
      },
      exec);
  canonical_sort(out);
  return out;
}

long long count_frobenius(const Ctx& ctx, const Point& f, Exec exec) {
  SemigroupTree roots = boxed_tree(ctx, f, exec);
  std::vector<long long> sizes = ordered_flat_map<long long>(
      roots.size(),
      [&](size_t i) {
        return std::vector<long long>{static_cast<long long>(
            closure_class_tree(roots.materialize(static_cast<int>(i)), Exec::serial).size())};
      },
      exec);
  long long total = 0;
  for (long long v : sizes) total += v;
  return total;
}

}  // namespace csg
