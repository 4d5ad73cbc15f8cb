#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "csg/cone.hpp"
#include "csg/point.hpp"

namespace csg {

// Addition-compatible total order on the cone, realized by a stack of integer
// weight rows compared lexicographically. Requirements enforced at build time:
// the stacked matrix has rank p (so the order is total on Z^p) and the first
// row is strictly positive on every ray (so 0 is minimal, every down-set
// {x : x <= f} is finite, and larger first weight implies strictly larger).
class WeightOrder {
 public:
  static WeightOrder make(const Cone& cone, std::vector<std::vector<long long>> weights);

  const std::vector<std::vector<long long>>& weights() const { return weights_; }

  long long primary_weight(const Point& x) const;  // w1 . x
  std::strong_ordering compare(const Point& x, const Point& y) const;
  bool less(const Point& x, const Point& y) const { return compare(x, y) < 0; }
  bool leq(const Point& x, const Point& y) const { return compare(x, y) <= 0; }

 private:
  explicit WeightOrder(std::vector<std::vector<long long>> w) : weights_(std::move(w)) {}
  std::vector<std::vector<long long>> weights_;
};

// A cone paired with a total order on it. Shared immutably by semigroups.
struct Context {
  Cone cone;
  WeightOrder order;

  Context(Cone c, WeightOrder o) : cone(std::move(c)), order(std::move(o)) {}

  int dim() const { return cone.dim(); }
  bool in_cone(const Point& x) const { return cone.contains(x); }
  long long pi1(const Point& x) const { return order.primary_weight(x); }
  std::strong_ordering cmp(const Point& x, const Point& y) const { return order.compare(x, y); }
  bool less(const Point& x, const Point& y) const { return order.less(x, y); }
  bool leq(const Point& x, const Point& y) const { return order.leq(x, y); }
};

using Ctx = std::shared_ptr<const Context>;

Ctx make_context(Cone cone, WeightOrder order);

// Convenience: full N^dim under deglex (weights [[1,..,1],[1,0,..],[0,1,0,..],...]).
Ctx deglex_context(int dim);

// Cone points x with w1.x == d, sorted by the order. Empty levels are possible
// for narrow simplicial cones.
std::vector<Point> level_points(const Context& ctx, long long d);

// All nonzero x in C with x <= f, sorted increasingly. Errors: NotInCone.
std::vector<Point> points_up_to(const Context& ctx, const Point& f);

// N(f): number of nonzero cone points <= f. Errors: NotInCone.
long long rank_of(const Context& ctx, const Point& f);

// k-th nonzero cone point in order, k >= 1.
Point point_at_rank(const Context& ctx, long long k);

// Least cone point strictly greater than f.
Point successor(const Context& ctx, const Point& f);

// Cursor over nonzero cone points in increasing order; single consumer.
class OrderedRun {
 public:
  explicit OrderedRun(const Context& ctx) : ctx_(ctx) {}
  const Point& next();

 private:
  const Context& ctx_;
  long long level_ = 0;
  std::vector<Point> buf_;
  size_t pos_ = 0;
};

}  // namespace csg
