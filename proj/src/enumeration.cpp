#include "csg/enumeration.hpp"

#include <algorithm>
#include <string>

#include "csg/error.hpp"

namespace csg {

GenusRange genus_range(const Context& ctx, const Point& f) {
  if (is_zero(f)) fail(Errc::not_in_cone, show(f) + " (zero excluded)");
  long long b = ctx.cone.box_size(f);  // NotInCone for bad f
  return GenusRange{(b + 1) / 2, rank_of(ctx, f)};
}

namespace {

// Children: fill one special gap x != f lying strictly below the parent's
// multiplicity. The filled element becomes the child's multiplicity, which
// identifies the parent, so distinct branches never collide and no
// deduplication is needed.
std::vector<CSemigroup> fb_children(const CSemigroup& t, const Point& f) {
  const Context& c = t.c();
  Point m = multiplicity(t);
  std::vector<CSemigroup> out;
  for (const Point& x : special_gaps(t)) {
    if (x == f || !c.less(x, m)) continue;
    std::vector<Point> gaps = t.gaps();
    gaps.erase(std::find(gaps.begin(), gaps.end(), x));
    out.push_back(CSemigroup::trusted(t.ctx(), std::move(gaps)));
  }
  return out;
}

}  // namespace

std::vector<CSemigroup> enumerate_fb_genus(const Ctx& ctx, const Point& f, long long g,
                                           Exec exec) {
  if (g < 1) fail(Errc::bad_genus, std::to_string(g));
  GenusRange r = genus_range(*ctx, f);
  if (!r.contains(g)) return {};
  std::vector<CSemigroup> frontier{ordinary_from_frobenius(ctx, f)};
  for (long long round = 0; round < r.hi - g; ++round) {
    frontier = ordered_flat_map<CSemigroup>(
        frontier.size(), [&](size_t i) { return fb_children(frontier[i], f); }, exec);
  }
  canonical_sort(frontier);
  return frontier;
}

std::vector<Point> frobenius_candidates(const Ctx& ctx, long long g) {
  if (g < 1) return {};
  const Context& c = *ctx;
  // Any f with #box(f) <= 2g has ray coefficients below 2g: already a single
  // coefficient reaching 2g yields 2g + 1 multiples of that ray in the box.
  // That caps every coordinate of f.
  Point bound(static_cast<size_t>(c.dim()));
  for (size_t j = 0; j < bound.size(); ++j) {
    long long b = 0;
    for (const Point& r : c.cone.rays()) b += 2 * g * r[j];
    bound[j] = static_cast<int>(c.cone.is_full() ? 2 * g - 1 : b);
  }
  std::vector<Point> out;
  Point f = zero_point(c.dim());
  for (;;) {
    if (!is_zero(f) && c.in_cone(f) && c.cone.box_size(f) <= 2 * g && rank_of(c, f) >= g)
      out.push_back(f);
    int i = c.dim() - 1;
    while (i >= 0 && f[static_cast<size_t>(i)] == bound[static_cast<size_t>(i)]) {
      f[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++f[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end(),
            [&](const Point& a, const Point& b) { return c.less(a, b); });
  return out;
}

namespace {

// Children in the genus-graded tree remove one minimal generator lying beyond
// the Frobenius element. The removed element becomes the child's Frobenius
// element, which identifies the parent (add the largest gap back), so every
// semigroup of genus k appears exactly once at level k and branches never
// collide. Walking level by level from the whole cone is vastly cheaper than
// enumerating per Frobenius fiber: a fiber descent has to cross every genus
// between N(f) and g, and those intermediate layers blow up for candidates
// with large N(f) even when the target layer is tiny.
std::vector<CSemigroup> genus_children(const CSemigroup& t) {
  const Context& c = t.c();
  const Point* fb = t.is_full() ? nullptr : &t.frobenius();
  std::vector<CSemigroup> out;
  for (const Point& x : minimal_generators(t)) {
    if (fb != nullptr && !c.less(*fb, x)) continue;
    std::vector<Point> gaps = t.gaps();
    gaps.push_back(x);  // x lies beyond every existing gap: order preserved
    out.push_back(CSemigroup::trusted(t.ctx(), std::move(gaps)));
  }
  return out;
}

}  // namespace

std::vector<CSemigroup> enumerate_genus(const Ctx& ctx, long long g, Exec exec) {
  if (g < 0) fail(Errc::bad_genus, std::to_string(g));
  std::vector<CSemigroup> frontier{CSemigroup::full(ctx)};
  for (long long round = 0; round < g; ++round) {
    frontier = ordered_flat_map<CSemigroup>(
        frontier.size(), [&](size_t i) { return genus_children(frontier[i]); }, exec);
  }
  canonical_sort(frontier);
  return frontier;
}

std::vector<CSemigroup> enumerate_genus_smalls(const Ctx& ctx, long long g, long long n,
                                               Exec exec) {
  if (g < 1 || n < 1)
    fail(Errc::bad_parameters, "genus and small count must be >= 1");
  const Context& c = *ctx;
  // n - 1 + g = N(Fb) pins the Frobenius number of every solution, so filter
  // the genus layer by that rank.
  std::vector<CSemigroup> out;
  for (CSemigroup& s : enumerate_genus(ctx, g, exec))
    if (rank_of(c, s.frobenius()) == g + n - 1) out.push_back(std::move(s));
  return out;
}

}  // namespace csg
