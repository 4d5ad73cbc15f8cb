#include "csg/families.hpp"

#include <algorithm>

#include "csg/error.hpp"

namespace csg {

CSemigroup ordinary_semigroup(const Ctx& ctx, const Point& c) {
  const Context& cx = *ctx;
  if (!cx.in_cone(c)) fail(Errc::not_in_cone, show(c));
  if (is_zero(c)) return CSemigroup::full(ctx);
  std::vector<Point> gaps = points_up_to(cx, c);
  gaps.pop_back();  // strict predecessors of c
  return CSemigroup::trusted(ctx, std::move(gaps));
}

CSemigroup mult_embedded_semigroup(const Ctx& ctx, const Point& m, long long k) {
  const Context& cx = *ctx;
  if (!cx.in_cone(m)) fail(Errc::not_in_cone, show(m));
  if (is_zero(m)) fail(Errc::zero_multiplicity, "multiplicity must be nonzero");
  if (k < 1) fail(Errc::bad_parameters, "k must be >= 1");
  Point km = scaled(static_cast<int>(k), m);
  std::vector<Point> gaps = points_up_to(cx, km);
  gaps.pop_back();
  for (int i = 1; i < k; ++i)
    gaps.erase(std::find(gaps.begin(), gaps.end(), scaled(i, m)));
  // Orders whose first weight is not graded can break closure here, so this
  // constructor validates instead of trusting.
  return CSemigroup::from_gaps(ctx, std::move(gaps));
}

namespace {

void require_n2_deglex(const Context& c) {
  const auto& w = c.order.weights();
  bool ok = c.cone.is_full() && c.dim() == 2 && w.size() == 2 &&
            w[0] == std::vector<long long>{1, 1} && w[1] == std::vector<long long>{1, 0};
  if (!ok)
    fail(Errc::not_n2_deglex, "closed forms need the full N^2 cone with weights [[1,1],[1,0]]");
}

void append_level_range(const Context& c, long long dlo, long long dhi,
                        const std::function<bool(const Point&)>& keep,
                        std::vector<Point>& out) {
  for (long long d = dlo; d <= dhi; ++d)
    for (Point& x : level_points(c, d))
      if (keep(x)) out.push_back(std::move(x));
}

}  // namespace

MsgFormula ordinary_msg_formula(const Ctx& ctx, const Point& c) {
  const Context& cx = *ctx;
  require_n2_deglex(cx);
  if (is_zero(c)) fail(Errc::zero_conductor, "conductor must be nonzero");
  long long c1 = c[0], c2 = c[1], pi = c1 + c2;
  MsgFormula r;
  if (c1 == 0) {
    // two full degree bands
    append_level_range(cx, pi, 2 * pi - 1, [](const Point&) { return true; }, r.gens);
    r.e = c2 * (3 * c2 + 1) / 2;
  } else {
    // [c, 2c) and [(0,2pi+1), c+(0,pi+1)); the second lives in one level
    Point twoc = scaled(2, c);
    append_level_range(
        cx, pi, 2 * pi,
        [&](const Point& x) { return cx.leq(c, x) && cx.less(x, twoc); }, r.gens);
    Point lo{0, static_cast<int>(2 * pi + 1)};
    Point hi{static_cast<int>(c1), static_cast<int>(c2 + pi + 1)};
    append_level_range(
        cx, 2 * pi + 1, 2 * pi + 1,
        [&](const Point& x) { return cx.leq(lo, x) && cx.less(x, hi); }, r.gens);
    r.e = (3 * pi * pi + pi + 4 * c1) / 2;
  }
  return r;
}

MsgFormula mult_embedded_msg_formula(const Ctx& ctx, const Point& m, long long k) {
  const Context& cx = *ctx;
  require_n2_deglex(cx);
  if (is_zero(m)) fail(Errc::zero_multiplicity, "multiplicity must be nonzero");
  if (k < 1) fail(Errc::bad_parameters, "k must be >= 1");
  long long m1 = m[0], m2 = m[1], pi = m1 + m2;
  Point km = scaled(static_cast<int>(k), m);
  Point k1m = scaled(static_cast<int>(k + 1), m);
  MsgFormula r;
  r.gens.push_back(m);
  append_level_range(
      cx, k * pi, (k + 1) * pi,
      [&](const Point& x) { return cx.less(km, x) && cx.less(x, k1m); }, r.gens);
  append_level_range(
      cx, (k + 1) * pi, 2 * k * pi - 1, [&](const Point& x) { return x[1] < m2; }, r.gens);
  append_level_range(
      cx, (k + 1) * pi + 1, 2 * k * pi + 1, [&](const Point& x) { return x[0] < m1; }, r.gens);
  std::sort(r.gens.begin(), r.gens.end(),
            [&](const Point& a, const Point& b) { return cx.less(a, b); });
  r.e = ((4 * k - 1) * pi * pi + pi + 4 * m1) / 2;
  return r;
}

WilfReport check_generalized_wilf(const CSemigroup& s) {
  if (!s.c().cone.is_full()) fail(Errc::not_full_cone, "generalized form needs N^p");
  WilfReport r;
  r.kind = WilfReport::Kind::generalized;
  r.count = nu_count(s);
  r.e = static_cast<long long>(minimal_generators(s).size());
  r.weight = gamma_count(s);
  r.dim = s.c().dim();
  r.lhs = r.count * r.e;
  r.rhs = r.dim * r.weight;
  r.holds = r.lhs >= r.rhs;
  return r;
}

WilfReport check_extended_wilf(const CSemigroup& s) {
  if (s.is_full()) fail(Errc::full_cone, "the full cone has no Frobenius element");
  WilfReport r;
  r.kind = WilfReport::Kind::extended;
  r.weight = rank_of(s.c(), s.frobenius());
  r.count = r.weight - s.genus() + 1;
  r.e = static_cast<long long>(minimal_generators(s).size());
  r.dim = s.c().dim();
  r.lhs = r.count * r.e;
  r.rhs = r.weight + 1;
  r.holds = r.lhs >= r.rhs;
  return r;
}

}  // namespace csg
