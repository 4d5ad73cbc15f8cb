#pragma once

#include <vector>

#include "csg/parallel.hpp"
#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

namespace csg {

// "Boxed" semigroups: all gaps lie inside the Frobenius box B(Fb(S)).
// They are the coarsest members of their Frobenius class and the roots of the
// closure-class partition (see partition.hpp).

// S union everything outside B(f); gaps(result) = gaps(S) restricted to the
// box. f defaults to Fb(S); the full cone is returned unchanged.
CSemigroup box_closure(const CSemigroup& s);
CSemigroup box_closure(const CSemigroup& s, const Point& f);

bool is_boxed(const CSemigroup& s);  // Errors: FullCone

// Least nonzero S-element inside B(Fb(S)); Fb(S) itself when the box holds
// no nonzero S-element. Errors: FullCone.
Point box_multiplicity(const CSemigroup& s);

// Children in the boxed tree: fill a special gap x strictly below
// box_multiplicity(T). Sorted by edge label.
std::vector<Point> boxed_child_edges(const CSemigroup& t, const Point& f);

// Full tree of all boxed semigroups with Frobenius f, rooted at
// (C \ B(f)) union {0}. Level L holds genus #box(f)-1-L. Errors: NotInCone.
SemigroupTree boxed_tree(const Ctx& ctx, const Point& f, Exec exec = Exec::parallel);

// Genus interval for boxed semigroups: ceil(#box/2) <= g <= #box - 1.
GenusRange boxed_genus_range(const Context& ctx, const Point& f);

// Boxed semigroups with Frobenius f and genus g (one tree level).
// Errors: BadGenus outside the range.
std::vector<CSemigroup> enumerate_boxed_fb_genus(const Ctx& ctx, const Point& f, long long g,
                                                 Exec exec = Exec::parallel);

// f with #box(f) in [g+1, 2g]; the box is order-independent, so this set is
// too.
std::vector<Point> boxed_frobenius_candidates(const Ctx& ctx, long long g);

std::vector<CSemigroup> enumerate_boxed_genus(const Ctx& ctx, long long g,
                                              Exec exec = Exec::parallel);

// Census rows (g, count) for g = 1..gmax.
std::vector<std::pair<long long, long long>> boxed_census(const Ctx& ctx, long long gmax,
                                                          Exec exec = Exec::parallel);

}  // namespace csg
