#include "csg/order.hpp"

#include <algorithm>

#include "csg/error.hpp"

namespace csg {

namespace {

// Exact rank over Q by fraction-free elimination; entries stay small.
int matrix_rank(std::vector<std::vector<__int128>> m) {
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    for (size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      __int128 a = m[row][col], b = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * a - m[row][c] * b;
    }
    ++row;
    ++rank;
  }
  return rank;
}

long long dot(const std::vector<long long>& w, const Point& x) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

}  // namespace

WeightOrder WeightOrder::make(const Cone& cone, std::vector<std::vector<long long>> weights) {
  if (weights.empty()) fail(Errc::bad_parameters, "empty weight matrix");
  size_t dim = static_cast<size_t>(cone.dim());
  for (const auto& row : weights)
    if (row.size() != dim) fail(Errc::dimension_mismatch, "weight row size");
  std::vector<std::vector<__int128>> m(weights.size(), std::vector<__int128>(dim));
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t j = 0; j < dim; ++j) m[i][j] = weights[i][j];
  if (matrix_rank(std::move(m)) < cone.dim())
    fail(Errc::rank_deficient, "weight matrix rank below dimension");
  for (const Point& r : cone.rays())
    if (dot(weights[0], r) <= 0) fail(Errc::non_positive_primary_weight, show(r));
  return WeightOrder(std::move(weights));
}

long long WeightOrder::primary_weight(const Point& x) const { return dot(weights_[0], x); }

std::strong_ordering WeightOrder::compare(const Point& x, const Point& y) const {
  for (const auto& row : weights_) {
    long long dx = dot(row, x), dy = dot(row, y);
    if (dx != dy) return dx <=> dy;
  }
  return std::strong_ordering::equal;  // full rank: only x == y lands here
}

Ctx make_context(Cone cone, WeightOrder order) {
  return std::make_shared<const Context>(std::move(cone), std::move(order));
}

Ctx deglex_context(int dim) {
  Cone cone = Cone::full(dim);
  std::vector<std::vector<long long>> w;
  w.emplace_back(static_cast<size_t>(dim), 1);
  for (int i = 0; i + 1 < dim; ++i) {
    std::vector<long long> row(static_cast<size_t>(dim), 0);
    row[static_cast<size_t>(i)] = 1;
    w.push_back(std::move(row));
  }
  WeightOrder o = WeightOrder::make(cone, std::move(w));
  return make_context(std::move(cone), std::move(o));
}

namespace {

// Cone points of first weight d for the full cone: coordinate recursion over
// strictly positive weight entries.
void full_level_rec(const std::vector<long long>& w1, size_t i, long long rem, Point& cur,
                    std::vector<Point>& out) {
  if (i + 1 == cur.size()) {
    if (rem % w1[i] == 0) {
      cur[i] = static_cast<int>(rem / w1[i]);
      out.push_back(cur);
    }
    return;
  }
  for (long long v = 0; v * w1[i] <= rem; ++v) {
    cur[i] = static_cast<int>(v);
    full_level_rec(w1, i + 1, rem - v * w1[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Point> level_points(const Context& ctx, long long d) {
  if (d < 0) return {};
  if (d == 0) return {zero_point(ctx.dim())};
  std::vector<Point> out;
  const auto& w1 = ctx.order.weights()[0];
  if (ctx.cone.is_full()) {
    Point cur = zero_point(ctx.dim());
    full_level_rec(w1, 0, d, cur, out);
  } else {
    // x = l1 r1 + l2 r2 with li <= d / (w1 . ri) <= d, so coordinates are
    // bounded by d * (r1j + r2j).
    const auto& rays = ctx.cone.rays();
    Point bound(2);
    for (size_t j = 0; j < 2; ++j)
      bound[j] = static_cast<int>(d * (rays[0][j] + rays[1][j]));
    Point x(2);
    for (x[0] = 0; x[0] <= bound[0]; ++x[0])
      for (x[1] = 0; x[1] <= bound[1]; ++x[1])
        if (ctx.pi1(x) == d && ctx.in_cone(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(),
            [&](const Point& a, const Point& b) { return ctx.less(a, b); });
  return out;
}

std::vector<Point> points_up_to(const Context& ctx, const Point& f) {
  if (!ctx.in_cone(f)) fail(Errc::not_in_cone, show(f));
  std::vector<Point> out;
  long long top = ctx.pi1(f);
  for (long long d = 1; d <= top; ++d) {
    std::vector<Point> lvl = level_points(ctx, d);
    for (Point& x : lvl)
      if (d < top || ctx.leq(x, f)) out.push_back(std::move(x));
  }
  return out;
}

long long rank_of(const Context& ctx, const Point& f) {
  return static_cast<long long>(points_up_to(ctx, f).size());
}

Point point_at_rank(const Context& ctx, long long k) {
  if (k < 1) fail(Errc::bad_parameters, "rank must be >= 1");
  OrderedRun run(ctx);
  Point x;
  for (long long i = 0; i < k; ++i) x = run.next();
  return x;
}

Point successor(const Context& ctx, const Point& f) {
  if (!ctx.in_cone(f)) fail(Errc::not_in_cone, show(f));
  for (long long d = ctx.pi1(f);; ++d) {
    for (const Point& x : level_points(ctx, d))
      if (ctx.less(f, x)) return x;
  }
}

const Point& OrderedRun::next() {
  if (level_ == 0) level_ = 1;  // level 0 holds only the zero point
  while (pos_ >= buf_.size()) {
    buf_ = level_points(ctx_, level_++);
    pos_ = 0;
  }
  return buf_[pos_++];
}

}  // namespace csg
