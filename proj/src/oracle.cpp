#include "csg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "csg/error.hpp"

namespace csg {

bool oracle_closure_check(const Ctx& ctx, const std::vector<Point>& gaps) {
  std::unordered_set<Point, PointHash> H(gaps.begin(), gaps.end());
  for (const Point& h : gaps)
    for (const Point& a : ctx->cone.box(h)) {
      if (is_zero(a) || a == h) continue;
      if (!H.count(a) && !H.count(sub(h, a))) return false;
    }
  return true;
}

namespace {

struct SubsetScan {
  const Ctx& ctx;
  const std::vector<Point>& interval;             // sorted, f last
  std::unordered_map<Point, int, PointHash> idx;  // point -> interval position
  std::vector<Point> chosen;                      // ascending by position, f excluded
  std::unordered_set<Point, PointHash> chosen_set;
  std::vector<CSemigroup> out;

  // Positions before `cursor` that were not chosen are excluded for good; a
  // gap whose every decomposition uses two excluded points can never close,
  // which prunes the branch early. The leaf still runs the full check.
  bool can_still_close(const Point& h, int cursor) const {
    for (const Point& a : ctx->cone.box(h)) {
      if (is_zero(a) || a == h) continue;
      Point b = sub(h, a);
      if (excluded(a, cursor) && excluded(b, cursor)) return false;
    }
    return true;
  }

  bool excluded(const Point& p, int cursor) const {
    if (chosen_set.count(p)) return false;
    auto it = idx.find(p);
    return it != idx.end() && it->second < cursor;
  }

  void rec(int from, long long remaining) {
    if (remaining == 0) {
      std::vector<Point> H = chosen;
      H.push_back(interval.back());
      if (oracle_closure_check(ctx, H)) out.push_back(CSemigroup::trusted(ctx, std::move(H)));
      return;
    }
    int last = static_cast<int>(interval.size()) - 1;  // f's position, always in
    for (int i = from; last - i >= remaining; ++i) {
      const Point& h = interval[static_cast<size_t>(i)];
      if (!can_still_close(h, i)) continue;
      chosen.push_back(h);
      chosen_set.insert(h);
      rec(i + 1, remaining - 1);
      chosen.pop_back();
      chosen_set.erase(h);
    }
  }
};

}  // namespace

std::vector<CSemigroup> oracle_enumerate_fb_genus(const Ctx& ctx, const Point& f, long long g,
                                                  const OracleBudget& budget) {
  if (is_zero(f)) fail(Errc::not_in_cone, show(f) + " (zero excluded)");
  std::vector<Point> interval = points_up_to(*ctx, f);
  long long region = static_cast<long long>(interval.size());
  if (region > budget.max_region_points)
    fail(Errc::budget_exceeded, "region holds " + std::to_string(region) + " points");
  if (g < 1 || g > region) return {};
  long double subsets = 1;  // C(region-1, g-1)
  for (long long i = 1; i < g; ++i) subsets = subsets * (region - g + i) / i;
  if (subsets > static_cast<long double>(budget.max_subsets))
    fail(Errc::budget_exceeded, "about " + std::to_string((double)subsets) + " subsets");
  SubsetScan scan{ctx, interval, {}, {}, {}, {}};
  for (size_t i = 0; i < interval.size(); ++i)
    scan.idx.emplace(interval[i], static_cast<int>(i));
  scan.rec(0, g - 1);
  canonical_sort(scan.out);
  return scan.out;
}

std::vector<Point> oracle_msg(const CSemigroup& s, long long slack) {
  if (slack < 0) fail(Errc::bad_parameters, "slack must be >= 0");
  const Context& c = s.c();
  auto member = [&](const Point& x) { return s.contains(x); };
  long long bound = s.is_full() ? 0 : c.pi1(s.frobenius());
  for (size_t i = 0; i < c.cone.rays().size(); ++i)
    bound += c.pi1(c.cone.ray_multiplicity(static_cast<int>(i), member));
  std::vector<Point> gens;
  OrderedRun run(c);
  for (;;) {
    const Point& x = run.next();
    if (c.pi1(x) > bound + slack) break;
    if (!s.contains(x)) continue;
    bool decomposes = false;
    for (const Point& a : c.cone.box(x)) {  // straight from the definition
      if (is_zero(a) || a == x) continue;
      if (s.contains(a) && s.contains(sub(x, a))) {
        decomposes = true;
        break;
      }
    }
    if (decomposes) continue;
    if (c.pi1(x) > bound)
      throw std::logic_error("minimal generator beyond the search bound: " + show(x));
    gens.push_back(x);
  }
  return gens;
}

}  // namespace csg
