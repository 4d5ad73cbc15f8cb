#include "csg/boxed.hpp"

#include <algorithm>
#include <string>

#include "csg/error.hpp"

namespace csg {

CSemigroup box_closure(const CSemigroup& s, const Point& f) {
  const Context& c = s.c();
  std::vector<Point> gaps;
  for (const Point& h : s.gaps())
    if (c.in_cone(sub(f, h))) gaps.push_back(h);
  return CSemigroup::trusted(s.ctx(), std::move(gaps));
}

CSemigroup box_closure(const CSemigroup& s) {
  if (s.is_full()) return s;
  return box_closure(s, s.frobenius());
}

bool is_boxed(const CSemigroup& s) {
  const Point& f = s.frobenius();
  const Context& c = s.c();
  for (const Point& h : s.gaps())
    if (!c.in_cone(sub(f, h))) return false;
  return true;
}

Point box_multiplicity(const CSemigroup& s) {
  const Point& f = s.frobenius();
  const Context& c = s.c();
  std::vector<Point> bx = c.cone.box(f);
  std::sort(bx.begin(), bx.end(),
            [&](const Point& a, const Point& b) { return c.less(a, b); });
  for (const Point& x : bx)
    if (!is_zero(x) && s.contains(x)) return x;
  return f;
}

std::vector<Point> boxed_child_edges(const CSemigroup& t, const Point& f) {
  if (t.frobenius() != f) fail(Errc::frobenius_mismatch, show(t.frobenius()) + " vs " + show(f));
  const Context& c = t.c();
  Point alpha = box_multiplicity(t);
  std::vector<Point> out;
  for (const Point& x : special_gaps(t))
    if (c.less(x, alpha)) out.push_back(x);
  return out;
}

namespace {

CSemigroup boxed_root(const Ctx& ctx, const Point& f) {
  const Context& c = *ctx;
  if (is_zero(f)) fail(Errc::not_in_cone, show(f) + " (zero excluded)");
  if (!c.in_cone(f)) fail(Errc::not_in_cone, show(f));
  std::vector<Point> gaps;
  for (Point& x : c.cone.box(f))
    if (!is_zero(x)) gaps.push_back(std::move(x));
  std::sort(gaps.begin(), gaps.end(),
            [&](const Point& a, const Point& b) { return c.less(a, b); });
  return CSemigroup::trusted(ctx, std::move(gaps));
}

CSemigroup fill_gap(const CSemigroup& t, const Point& x) {
  std::vector<Point> gaps = t.gaps();
  gaps.erase(std::find(gaps.begin(), gaps.end(), x));
  return CSemigroup::trusted(t.ctx(), std::move(gaps));
}

// Frontier walk `levels` steps down from the root, recording level sizes.
std::vector<CSemigroup> descend(const Ctx& ctx, const Point& f, long long levels, Exec exec,
                                std::vector<long long>* level_sizes = nullptr) {
  std::vector<CSemigroup> frontier{boxed_root(ctx, f)};
  if (level_sizes) level_sizes->push_back(1);
  for (long long l = 0; l < levels && !frontier.empty(); ++l) {
    frontier = ordered_flat_map<CSemigroup>(
        frontier.size(),
        [&](size_t i) {
          std::vector<CSemigroup> ch;
          for (const Point& x : boxed_child_edges(frontier[i], f))
            ch.push_back(fill_gap(frontier[i], x));
          return ch;
        },
        exec);
    if (level_sizes) level_sizes->push_back(static_cast<long long>(frontier.size()));
  }
  return frontier;
}

}  // namespace

SemigroupTree boxed_tree(const Ctx& ctx, const Point& f, Exec exec) {
  SemigroupTree tree(boxed_root(ctx, f), SemigroupTree::EdgeKind::gap_removed);
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
          for (const Point& x : boxed_child_edges(it.sg, f))
            ch.push_back(Child{it.id, x, fill_gap(it.sg, x)});
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

GenusRange boxed_genus_range(const Context& ctx, const Point& f) {
  if (is_zero(f)) fail(Errc::not_in_cone, show(f) + " (zero excluded)");
  long long b = ctx.cone.box_size(f);  // NotInCone for bad f
  return GenusRange{(b + 1) / 2, b - 1};
}

std::vector<CSemigroup> enumerate_boxed_fb_genus(const Ctx& ctx, const Point& f, long long g,
                                                 Exec exec) {
  GenusRange r = boxed_genus_range(*ctx, f);
  if (!r.contains(g)) fail(Errc::bad_genus, std::to_string(g));
  std::vector<CSemigroup> out = descend(ctx, f, r.hi - g, exec);
  canonical_sort(out);
  return out;
}

std::vector<Point> boxed_frobenius_candidates(const Ctx& ctx, long long g) {
  if (g < 1) return {};
  const Context& c = *ctx;
  Point bound(static_cast<size_t>(c.dim()));
  for (size_t j = 0; j < bound.size(); ++j) {
    long long b = 0;
    for (const Point& r : c.cone.rays()) b += 2 * g * r[j];
    bound[j] = static_cast<int>(c.cone.is_full() ? 2 * g - 1 : b);
  }
  std::vector<Point> out;
  Point f = zero_point(c.dim());
  for (;;) {
    if (!is_zero(f) && c.in_cone(f)) {
      long long b = c.cone.box_size(f);
      if (g + 1 <= b && b <= 2 * g) out.push_back(f);
    }
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

std::vector<CSemigroup> enumerate_boxed_genus(const Ctx& ctx, long long g, Exec exec) {
  std::vector<Point> cand = boxed_frobenius_candidates(ctx, g);
  std::vector<CSemigroup> out = ordered_flat_map<CSemigroup>(
      cand.size(),
      [&](size_t i) { return enumerate_boxed_fb_genus(ctx, cand[i], g, Exec::serial); }, exec);
  canonical_sort(out);
  return out;
}

std::vector<std::pair<long long, long long>> boxed_census(const Ctx& ctx, long long gmax,
                                                          Exec exec) {
  if (gmax < 1) fail(Errc::bad_parameters, "gmax must be >= 1");
  const Context& c = *ctx;
  // One tree walk per Frobenius candidate covers every genus it contributes
  // to; level sizes convert directly into per-genus counts.
  std::vector<Point> cand;
  {
    Point bound(static_cast<size_t>(c.dim()));
    for (size_t j = 0; j < bound.size(); ++j) {
      long long b = 0;
      for (const Point& r : c.cone.rays()) b += 2 * gmax * r[j];
      bound[j] = static_cast<int>(c.cone.is_full() ? 2 * gmax - 1 : b);
    }
    Point f = zero_point(c.dim());
    for (;;) {
      if (!is_zero(f) && c.in_cone(f) && c.cone.box_size(f) <= 2 * gmax) cand.push_back(f);
      int i = c.dim() - 1;
      while (i >= 0 && f[static_cast<size_t>(i)] == bound[static_cast<size_t>(i)]) {
        f[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++f[static_cast<size_t>(i)];
    }
  }
  std::vector<std::pair<long long, long long>> contributions = ordered_flat_map<
      std::pair<long long, long long>>(
      cand.size(),
      [&](size_t i) {
        long long b = c.cone.box_size(cand[i]);
        GenusRange r{(b + 1) / 2, b - 1};
        std::vector<long long> sizes;
        descend(ctx, cand[i], r.hi - r.lo, Exec::serial, &sizes);
        std::vector<std::pair<long long, long long>> rows;
        for (long long g = r.lo; g <= std::min(r.hi, gmax); ++g) {
          size_t level = static_cast<size_t>(r.hi - g);
          if (level < sizes.size() && sizes[level] > 0) rows.emplace_back(g, sizes[level]);
        }
        return rows;
      },
      exec);
  std::vector<std::pair<long long, long long>> census;
  for (long long g = 1; g <= gmax; ++g) census.emplace_back(g, 0);
  for (const auto& [g, n] : contributions) census[static_cast<size_t>(g - 1)].second += n;
  return census;
}

}  // namespace csg
