#pragma once

#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

// Two parametric families with closed-form minimal generating sets on N^2
// under the degree-lexicographic order, plus the two Wilf-style checkers.

// {0} ∪ {x in C : x >= c}. c = 0 gives the whole cone.
// Errors: NotInCone.
CSemigroup ordinary_semigroup(const Ctx& ctx, const Point& c);

// {0, m, 2m, ..., (k-1)m} ∪ ordinary(k·m). The constructor validates closure
// instead of assuming the order is graded.
// Errors: ZeroMultiplicity, BadParameters (k < 1), NotInCone, NotClosed.
CSemigroup mult_embedded_semigroup(const Ctx& ctx, const Point& m, long long k);

struct MsgFormula {
  std::vector<Point> gens;  // sorted by the order
  long long e = 0;          // embedding dimension by formula; always == gens.size()
};

// Closed form for minimal_generators(ordinary_semigroup(c)).
// c1 == 0: the two full levels pi(c)..2pi(c)-1; e = c2(3c2+1)/2.
// c1 != 0: the intervals [c,2c) and [(0,2pi(c)+1), c+(0,pi(c)+1));
//          e = (3pi(c)^2 + pi(c) + 4c1)/2.
// Hard-gated to the full N^2 cone with weights [[1,1],[1,0]].
// Errors: NotN2Deglex, ZeroConductor.
MsgFormula ordinary_msg_formula(const Ctx& ctx, const Point& c);

// Closed form for minimal_generators(mult_embedded_semigroup(m,k)):
// {m} ∪ (km,(k+1)m) ∪ {x : (k+1)pi(m) <= pi(x) <= 2k·pi(m)-1, x2 < m2}
//     ∪ {x : (k+1)pi(m)+1 <= pi(x) <= 2k·pi(m)+1, x1 < m1};
// e = ((4k-1)pi(m)^2 + pi(m) + 4m1)/2. Same gate as above.
// Errors: NotN2Deglex, ZeroMultiplicity, BadParameters (k < 1).
MsgFormula mult_embedded_msg_formula(const Ctx& ctx, const Point& m, long long k);

struct WilfReport {
  enum class Kind { generalized, extended };
  Kind kind;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;  // lhs >= rhs
  // components: generalized = (nu, e, gamma, p); extended = (n, e, N(Fb), 1)
  long long count = 0;   // nu or n
  long long e = 0;       // embedding dimension
  long long weight = 0;  // gamma or N(Fb)
  int dim = 1;
};

// nu(S)·e(S) >= p·gamma(S), full cones only. S = C holds trivially (0 >= 0).
// Errors: NotFullCone.
WilfReport check_generalized_wilf(const CSemigroup& s);

// n(S)·e(S) >= N(Fb(S)) + 1.
// Errors: FullCone.
WilfReport check_extended_wilf(const CSemigroup& s);

}  // namespace csg
