// Parametric families with closed-form generator sets, and the two
// Wilf-style checkers. Frozen values (169, 209, ...) come from independent
// brute-force generator counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "doctest.h"

#include "csg/error.hpp"
#include "csg/families.hpp"
#include "csg/order.hpp"
#include "csg/semigroup.hpp"

using namespace csg;

namespace {

std::optional<Errc> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Ctx k2() { return deglex_context(2); }

CSemigroup s4(const Ctx& ctx) {
  return CSemigroup::from_gaps(ctx, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 2}});
}

}  // namespace

TEST_CASE("ordinary semigroup from a conductor") {
  Ctx ctx = k2();
  CSemigroup s = ordinary_semigroup(ctx, Point{2, 2});
  CHECK(s.genus() == 11);  // nonzero points strictly below (2,2)
  CHECK(s.frobenius() == Point{1, 3});
  CHECK(invariants(s).conductor == Point{2, 2});
  CHECK(s.contains(Point{2, 2}));
  CHECK(s.contains(Point{3, 1}));
  CHECK(s.is_gap(Point{0, 4}));
  // The conductor pins the semigroup: same as building from its Frobenius element.
  CHECK(s == ordinary_from_frobenius(ctx, Point{1, 3}));
  CHECK(ordinary_semigroup(ctx, Point{0, 2}) == CSemigroup::from_gaps(ctx, {{0, 1}, {1, 0}}));
  CHECK(ordinary_semigroup(ctx, zero_point(2)) == CSemigroup::full(ctx));
  CHECK(code_of([&] { ordinary_semigroup(ctx, Point{-1, 0}); }) == Errc::not_in_cone);
}

TEST_CASE("multiple-embedded semigroup") {
  Ctx ctx = k2();
  CSemigroup s = mult_embedded_semigroup(ctx, Point{4, 2}, 3);
  CHECK(s.genus() == 180);  // 182 points below (12,6) minus the members (4,2),(8,4)
  CHECK(s.contains(Point{4, 2}));
  CHECK(s.contains(Point{8, 4}));
  CHECK(s.contains(Point{12, 6}));
  CHECK(s.contains(Point{13, 6}));
  CHECK(s.is_gap(Point{8, 5}));
  CHECK(s.is_gap(Point{1, 1}));
  CHECK(multiplicity(s) == Point{4, 2});

  CHECK(mult_embedded_semigroup(ctx, Point{0, 1}, 2) ==
        CSemigroup::from_gaps(ctx, {{1, 0}}));
  // k = 1 degenerates to the ordinary semigroup with conductor m.
  CHECK(mult_embedded_semigroup(ctx, Point{2, 1}, 1) == ordinary_semigroup(ctx, Point{2, 1}));

  CHECK(code_of([&] { mult_embedded_semigroup(ctx, zero_point(2), 2); }) ==
        Errc::zero_multiplicity);
  CHECK(code_of([&] { mult_embedded_semigroup(ctx, Point{1, 1}, 0); }) == Errc::bad_parameters);
  CHECK(code_of([&] { mult_embedded_semigroup(ctx, Point{-1, 1}, 2); }) == Errc::not_in_cone);
}

TEST_CASE("closed-form generators of ordinary semigroups match the direct scan") {
  Ctx ctx = k2();
  // Frozen embedding dimensions.
  CHECK(ordinary_msg_formula(ctx, Point{7, 3}).e == 169);
  CHECK(ordinary_msg_formula(ctx, Point{0, 3}).e == 15);
  CHECK(ordinary_msg_formula(ctx, Point{2, 2}).e == 30);
  CHECK(ordinary_msg_formula(ctx, Point{1, 0}).e == 4);

  const Context& c = *ctx;
  for (int c1 = 0; c1 <= 9; ++c1) {
    for (int c2 = 0; c1 + c2 <= 9; ++c2) {
      Point cond{c1, c2};
      if (is_zero(cond)) continue;
      MsgFormula f = ordinary_msg_formula(ctx, cond);
      CHECK(f.e == static_cast<long long>(f.gens.size()));
      std::vector<Point> direct = minimal_generators(ordinary_semigroup(ctx, cond));
      CHECK(f.gens == direct);
      CHECK(std::is_sorted(f.gens.begin(), f.gens.end(),
                           [&](const Point& a, const Point& b) { return c.less(a, b); }));
    }
  }
  // Frozen spot check outside the sweep.
  CHECK(ordinary_msg_formula(ctx, Point{7, 3}).gens ==
        minimal_generators(ordinary_semigroup(ctx, Point{7, 3})));
}

TEST_CASE("closed-form generators of multiple-embedded semigroups match the direct scan") {
  Ctx ctx = k2();
  CHECK(mult_embedded_msg_formula(ctx, Point{4, 2}, 3).e == 209);
  MsgFormula small = mult_embedded_msg_formula(ctx, Point{0, 1}, 2);
  CHECK(small.e == 4);
  CHECK(small.gens == std::vector<Point>{{0, 1}, {1, 1}, {2, 0}, {3, 0}});

  for (long long k = 1; k <= 4; ++k) {
    for (int m1 = 0; m1 <= 3; ++m1) {
      for (int m2 = 0; m1 + m2 <= 3; ++m2) {
        Point m{m1, m2};
        if (is_zero(m)) continue;
        MsgFormula f = mult_embedded_msg_formula(ctx, m, k);
        CHECK(f.e == static_cast<long long>(f.gens.size()));
        CHECK(f.gens == minimal_generators(mult_embedded_semigroup(ctx, m, k)));
      }
    }
  }
  // The frozen 209-generator case agrees with the direct scan too.
  CHECK(mult_embedded_msg_formula(ctx, Point{4, 2}, 3).gens ==
        minimal_generators(mult_embedded_semigroup(ctx, Point{4, 2}, 3)));
}

TEST_CASE("formula gates: order and cone must be the degree-lexicographic plane") {
  Cone full = Cone::full(2);
  Ctx alt = make_context(full, WeightOrder::make(full, {{2, 1}, {1, 0}}));
  CHECK(code_of([&] { ordinary_msg_formula(alt, Point{1, 1}); }) == Errc::not_n2_deglex);
  CHECK(code_of([&] { mult_embedded_msg_formula(alt, Point{1, 1}, 2); }) ==
        Errc::not_n2_deglex);

  Cone simp = Cone::make(2, {{2, 1}, {1, 2}});
  Ctx sctx = make_context(simp, WeightOrder::make(simp, {{1, 1}, {1, 0}}));
  CHECK(code_of([&] { ordinary_msg_formula(sctx, Point{1, 1}); }) == Errc::not_n2_deglex);

  Ctx ctx = k2();
  CHECK(code_of([&] { ordinary_msg_formula(ctx, zero_point(2)); }) == Errc::zero_conductor);
  CHECK(code_of([&] { mult_embedded_msg_formula(ctx, zero_point(2), 2); }) ==
        Errc::zero_multiplicity);
  CHECK(code_of([&] { mult_embedded_msg_formula(ctx, Point{1, 1}, 0); }) ==
        Errc::bad_parameters);
}

TEST_CASE("generalized Wilf numbers on the plane") {
  Ctx ctx = k2();
  WilfReport r = check_generalized_wilf(s4(ctx));
  CHECK(r.kind == WilfReport::Kind::generalized);
  CHECK(r.count == 4);    // members dominated by a gap, zero included
  CHECK(r.e == 10);
  CHECK(r.weight == 9);   // lattice points dominated by a gap
  CHECK(r.dim == 2);
  CHECK(r.lhs == 40);
  CHECK(r.rhs == 18);
  CHECK(r.holds);

  // One-gap semigroup: equality 1*4 == 2*2.
  WilfReport eq = check_generalized_wilf(CSemigroup::from_gaps(ctx, {{0, 1}}));
  CHECK(eq.lhs == 4);
  CHECK(eq.rhs == 4);
  CHECK(eq.holds);

  // The full cone holds trivially.
  WilfReport full = check_generalized_wilf(CSemigroup::full(ctx));
  CHECK(full.holds);
  CHECK(full.lhs == 0);
  CHECK(full.rhs == 0);

  Cone simp = Cone::make(2, {{2, 1}, {1, 2}});
  Ctx sctx = make_context(simp, WeightOrder::make(simp, {{1, 1}, {1, 0}}));
  CHECK(code_of([&] { check_generalized_wilf(CSemigroup::full(sctx)); }) ==
        Errc::not_full_cone);
}

TEST_CASE("extended Wilf numbers") {
  Ctx ctx = k2();
  WilfReport r = check_extended_wilf(s4(ctx));
  CHECK(r.kind == WilfReport::Kind::extended);
  CHECK(r.count == 8);    // small elements, zero included
  CHECK(r.e == 10);
  CHECK(r.weight == 12);  // N(Fb)
  CHECK(r.lhs == 80);
  CHECK(r.rhs == 13);
  CHECK(r.holds);
  CHECK(code_of([&] { check_extended_wilf(CSemigroup::full(ctx)); }) == Errc::full_cone);
}

TEST_CASE("both Wilf forms hold across the swept families") {
  Ctx ctx = k2();
  for (int c1 = 0; c1 <= 6; ++c1) {
    for (int c2 = 0; c1 + c2 <= 6; ++c2) {
      Point cond{c1, c2};
      if (is_zero(cond)) continue;
      CSemigroup s = ordinary_semigroup(ctx, cond);
      CHECK(check_generalized_wilf(s).holds);
      // Conductor (0,1) degenerates to the full cone, which has no Frobenius
      // element for the extended form.
      if (!s.is_full()) CHECK(check_extended_wilf(s).holds);
    }
  }
  for (long long k = 2; k <= 3; ++k) {
    for (int m1 = 0; m1 <= 2; ++m1) {
      for (int m2 = 0; m1 + m2 <= 2; ++m2) {
        Point m{m1, m2};
        if (is_zero(m)) continue;
        CSemigroup s = mult_embedded_semigroup(ctx, m, k);
        CHECK(check_generalized_wilf(s).holds);
        CHECK(check_extended_wilf(s).holds);
      }
    }
  }
}

TEST_CASE("embedding dimension exceeds genus on ordinary semigroups") {
  Ctx ctx = k2();
  for (Point cond : {Point{1, 1}, Point{2, 2}, Point{0, 3}, Point{4, 0}}) {
    MsgFormula f = ordinary_msg_formula(ctx, cond);
    CHECK(f.e > ordinary_semigroup(ctx, cond).genus());
  }
}
