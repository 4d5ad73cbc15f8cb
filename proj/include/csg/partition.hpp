#pragma once

#include <vector>

#include "csg/parallel.hpp"
#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

namespace csg {

// Partition of the semigroups with a fixed Frobenius element f into classes
// sharing the same box closure. Within a class, members differ only in gaps
// outside B(f); walking from a member to the class root re-inserts the
// largest outside gap one step at a time.

// Same Frobenius element and identical gap sets inside the box.
// Errors: FrobeniusMismatch.
bool same_box_closure(const CSemigroup& a, const CSemigroup& b);

// Largest gap outside B(Fb(S)); the zero point when every gap is boxed.
// Errors: FullCone.
Point max_outer_gap(const CSemigroup& s);

// Children in the class tree: remove a minimal generator x of T with
// max_outer_gap(T) < x < f. Only x outside the box qualifies — removing a
// boxed generator would change the box closure and leave the class (and the
// parent/child round trip T = child + {x} requires x to be the child's
// largest outside gap). Sorted.
std::vector<Point> class_child_edges(const CSemigroup& t, const Point& f);

// Tree of the whole closure class of S, rooted at box_closure(S).
// Errors: FullCone.
SemigroupTree closure_class_tree(const CSemigroup& s, Exec exec = Exec::parallel);

// Every semigroup with Frobenius element f: classes of the boxed semigroups,
// concatenated (disjoint, so no dedup), canonically sorted.
// Errors: NotInCone.
std::vector<CSemigroup> enumerate_frobenius(const Ctx& ctx, const Point& f,
                                            Exec exec = Exec::parallel);
long long count_frobenius(const Ctx& ctx, const Point& f, Exec exec = Exec::parallel);

}  // namespace csg
