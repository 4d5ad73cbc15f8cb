// Enumeration of semigroups by Frobenius element and/or genus, plus the
// candidate scan. Expected counts and gap sets come from an independent
// brute-force subset search over closed complements.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "doctest.h"

#include "csg/enumeration.hpp"
#include "csg/error.hpp"
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

// The four genus-5 semigroups with Frobenius element (2,2), canonical order.
std::vector<CSemigroup> genus5_fb22(const Ctx& ctx) {
  return {CSemigroup::from_gaps(ctx, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 2}}),
          CSemigroup::from_gaps(ctx, {{0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 2}}),
          CSemigroup::from_gaps(ctx, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}),
          CSemigroup::from_gaps(ctx, {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}})};
}

bool canonically_sorted_distinct(const std::vector<CSemigroup>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (!gapset_less(v[i - 1], v[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("feasible genus interval per Frobenius element") {
  Ctx ctx = k2();
  GenusRange r = genus_range(*ctx, Point{2, 2});
  CHECK(r.lo == 5);
  CHECK(r.hi == 12);
  CHECK(r.contains(5));
  CHECK(r.contains(12));
  CHECK_FALSE(r.contains(4));
  CHECK_FALSE(r.contains(13));

  r = genus_range(*ctx, Point{0, 1});
  CHECK(r.lo == 1);
  CHECK(r.hi == 1);

  r = genus_range(*ctx, Point{2, 1});
  CHECK(r.lo == 3);
  CHECK(r.hi == 8);

  CHECK(code_of([&] { genus_range(*ctx, Point{0, 0}); }) == Errc::not_in_cone);
  CHECK(code_of([&] { genus_range(*ctx, Point{-1, 2}); }) == Errc::not_in_cone);
}

TEST_CASE("fixed Frobenius element: counts per genus across the interval") {
  Ctx ctx = k2();
  const long long expected[] = {4, 17, 37, 49, 41, 22, 7, 1};  // g = 5..12, sum 178
  long long total = 0;
  for (long long g = 5; g <= 12; ++g) {
    std::vector<CSemigroup> v = enumerate_fb_genus(ctx, Point{2, 2}, g);
    CHECK(static_cast<long long>(v.size()) == expected[g - 5]);
    CHECK(canonically_sorted_distinct(v));
    for (const CSemigroup& s : v) {
      CHECK(s.genus() == g);
      CHECK(s.frobenius() == Point{2, 2});
    }
    total += static_cast<long long>(v.size());
  }
  CHECK(total == 178);
  // Out-of-interval targets are empty; g < 1 is an error.
  CHECK(enumerate_fb_genus(ctx, Point{2, 2}, 4).empty());
  CHECK(enumerate_fb_genus(ctx, Point{2, 2}, 13).empty());
  CHECK(code_of([&] { enumerate_fb_genus(ctx, Point{2, 2}, 0); }) == Errc::bad_genus);
  CHECK(code_of([&] { enumerate_fb_genus(ctx, Point{0, 0}, 3); }) == Errc::not_in_cone);
}

TEST_CASE("fixed Frobenius element: exact gap sets at the interval ends") {
  Ctx ctx = k2();
  CHECK(enumerate_fb_genus(ctx, Point{2, 2}, 5) == genus5_fb22(ctx));
  std::vector<CSemigroup> top = enumerate_fb_genus(ctx, Point{2, 2}, 12);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == ordinary_from_frobenius(ctx, Point{2, 2}));
}

TEST_CASE("Frobenius candidates for a target genus") {
  Ctx ctx = k2();
  CHECK(frobenius_candidates(ctx, 0).empty());
  CHECK(frobenius_candidates(ctx, 1) == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK(frobenius_candidates(ctx, 2) ==
        std::vector<Point>{{1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {3, 0}});
  std::vector<Point> f5 = frobenius_candidates(ctx, 5);
  CHECK(f5 ==
        std::vector<Point>{{2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}, {0, 4}, {1, 3}, {2, 2},
                           {3, 1}, {4, 0}, {0, 5}, {1, 4}, {4, 1}, {5, 0}, {0, 6}, {6, 0},
                           {0, 7}, {7, 0}, {0, 8}, {8, 0}, {0, 9}, {9, 0}});
  for (const Point& f : f5) CHECK(genus_range(*ctx, f).contains(5));
  // Membership is exactly range admission: spot-check a rejected neighbor.
  CHECK_FALSE(genus_range(*ctx, Point{3, 2}).contains(5));  // box 12 > 10
}

TEST_CASE("genus layers: counts and base cases") {
  Ctx ctx = k2();
  std::vector<CSemigroup> g0 = enumerate_genus(ctx, 0);
  REQUIRE(g0.size() == 1);
  CHECK(g0[0].is_full());

  std::vector<CSemigroup> g1 = enumerate_genus(ctx, 1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0] == CSemigroup::from_gaps(ctx, {{0, 1}}));
  CHECK(g1[1] == CSemigroup::from_gaps(ctx, {{1, 0}}));

  const long long expected[] = {2, 7, 23, 71, 210};  // g = 1..5
  for (long long g = 1; g <= 5; ++g) {
    std::vector<CSemigroup> v = enumerate_genus(ctx, g);
    CHECK(static_cast<long long>(v.size()) == expected[g - 1]);
    CHECK(canonically_sorted_distinct(v));
    for (const CSemigroup& s : v) CHECK(s.genus() == g);
  }
  CHECK(code_of([&] { enumerate_genus(ctx, -1); }) == Errc::bad_genus);
}

TEST_CASE("genus layer slices by Frobenius element match the fiber enumeration") {
  Ctx ctx = k2();
  const Context& c = *ctx;
  for (long long g : {3LL, 5LL}) {
    std::vector<CSemigroup> layer = enumerate_genus(ctx, g);
    // Split the layer by Frobenius element.
    std::map<Point, std::vector<CSemigroup>> fibers;
    for (const CSemigroup& s : layer) {
      InvariantRecord r = invariants(s);
      CHECK(r.small_count - 1 + r.genus == r.frobenius_number);
      CHECK(r.frobenius_number == rank_of(c, s.frobenius()));
      fibers[s.frobenius()].push_back(s);
    }
    // Every Frobenius element seen is a candidate, and each cheap fiber
    // equals the dedicated fixed-Frobenius enumeration. The fiber descent
    // crosses every genus between N(f) and g, so keep N(f) - g small: the
    // intermediate layers grow exponentially for high-rank candidates.
    std::vector<Point> cands = frobenius_candidates(ctx, g);
    for (const auto& [f, members] : fibers)
      CHECK(std::find(cands.begin(), cands.end(), f) != cands.end());
    for (const Point& f : cands) {
      if (rank_of(c, f) - g > 8) continue;
      std::vector<CSemigroup> direct = enumerate_fb_genus(ctx, f, g);
      auto it = fibers.find(f);
      std::vector<CSemigroup> from_layer = it == fibers.end() ? std::vector<CSemigroup>{}
                                                              : it->second;
      canonical_sort(from_layer);
      CHECK(from_layer == direct);
    }
  }
}

TEST_CASE("genus layer slice with Fb (2,2) reproduces the four genus-5 gap sets") {
  Ctx ctx = k2();
  std::vector<CSemigroup> hits;
  for (const CSemigroup& s : enumerate_genus(ctx, 5))
    if (s.frobenius() == Point{2, 2}) hits.push_back(s);
  CHECK(hits == genus5_fb22(ctx));
}

TEST_CASE("genus and small count pin the Frobenius number") {
  Ctx ctx = k2();
  // N(Fb) = g + n - 1 = 8 forces Fb = (2,1).
  CHECK(enumerate_genus_smalls(ctx, 4, 5) == enumerate_fb_genus(ctx, Point{2, 1}, 4));
  // g=5, n=8: N(Fb) = 12, Fb = (2,2).
  CHECK(enumerate_genus_smalls(ctx, 5, 8) == genus5_fb22(ctx));
  // g=1, n=1: N(Fb) = 1, the unique gap is (0,1).
  std::vector<CSemigroup> v = enumerate_genus_smalls(ctx, 1, 1);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == CSemigroup::from_gaps(ctx, {{0, 1}}));
  // Unattainable small counts give empty layers.
  CHECK(enumerate_genus_smalls(ctx, 5, 30).empty());
  CHECK(code_of([&] { enumerate_genus_smalls(ctx, 0, 1); }) == Errc::bad_parameters);
  CHECK(code_of([&] { enumerate_genus_smalls(ctx, 3, 0); }) == Errc::bad_parameters);
}

TEST_CASE("enumeration respects a non-degree order") {
  Cone cone = Cone::full(2);
  Ctx alt = make_context(cone, WeightOrder::make(cone, {{2, 1}, {1, 0}}));
  // Under weights (2,1), the least nonzero point is (0,1), then (0,2) ties 2
  // with (1,0) broken by the second row: (0,2) before (1,0).
  std::vector<CSemigroup> g1 = enumerate_genus(alt, 1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0] == CSemigroup::from_gaps(alt, {{0, 1}}));
  CHECK(g1[1] == CSemigroup::from_gaps(alt, {{1, 0}}));
  // Genus interval of (2,2) under the alternative order: box is order-free,
  // but N((2,2)) counts 14 points below weight (6,2).
  GenusRange r = genus_range(*alt, Point{2, 2});
  CHECK(r.lo == 5);
  CHECK(r.hi == 14);
}
