#pragma once

#include <vector>

#include "csg/parallel.hpp"
#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

namespace csg {

// Feasible genus interval for Frobenius element f:
// ceil(#box(f)/2) <= g <= N(f). Errors: NotInCone.
GenusRange genus_range(const Context& ctx, const Point& f);

// All semigroups with Frobenius element f and genus g, canonically sorted.
// Walks down from the ordinary semigroup with Frobenius f (genus N(f)),
// at each step filling one special gap x != f with x below the current
// multiplicity; every semigroup at the target genus is reached exactly once
// because a child's multiplicity identifies its parent. Errors: NotInCone,
// BadGenus (g < 1).
std::vector<CSemigroup> enumerate_fb_genus(const Ctx& ctx, const Point& f, long long g,
                                           Exec exec = Exec::parallel);

// Frobenius elements whose genus range admits g: #box(f) <= 2g and N(f) >= g.
// The scan rectangle is derived from the rays: any candidate has ray
// coordinates lambda_i <= 2g.
std::vector<Point> frobenius_candidates(const Ctx& ctx, long long g);

// All semigroups of genus g (g = 0 gives the full cone); disjoint union over
// the Frobenius candidates.
std::vector<CSemigroup> enumerate_genus(const Ctx& ctx, long long g, Exec exec = Exec::parallel);

// All semigroups with genus g and exactly n small elements: their Frobenius
// element is pinned by N(f) = g + n - 1. Errors: BadParameters.
std::vector<CSemigroup> enumerate_genus_smalls(const Ctx& ctx, long long g, long long n,
                                               Exec exec = Exec::parallel);

}  // namespace csg
