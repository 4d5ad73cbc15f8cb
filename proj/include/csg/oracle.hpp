#pragma once

#include <cstddef>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

// Slow, obviously-correct reference implementations used to cross-check the
// fast paths in tests. Everything here enumerates subsets or scans regions
// directly from the definitions; budgets keep runaway inputs from hanging.

struct OracleBudget {
  long long max_region_points = 64;        // interval size cap for subset scans
  long long max_subsets = 50'000'000;      // C(region, g) cap before starting
};

// Definition check: for every gap h and every cone point a with h - a in the
// cone (a != 0, a != h), either a or h - a is again a gap.
bool oracle_closure_check(const Ctx& ctx, const std::vector<Point>& gaps);

// All semigroups with Frobenius element f and genus g, by filtering the
// g-subsets of the order interval (0, f]. Sorted canonically.
// Errors: NotInCone, BudgetExceeded.
std::vector<CSemigroup> oracle_enumerate_fb_genus(const Ctx& ctx, const Point& f,
                                                  long long g,
                                                  const OracleBudget& budget = {});

// Minimal generators from the definition: scan S-elements x in order and keep
// those with no decomposition x = a + b (a, b nonzero S-elements). The scan
// stops `slack` order-steps past the proven bound and asserts the slack band
// produced nothing; a nonempty band reports BudgetExceeded with a witness.
std::vector<Point> oracle_msg(const CSemigroup& s, long long slack);

}  // namespace csg
