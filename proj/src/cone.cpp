#include "csg/cone.hpp"

#include <algorithm>
#include <numeric>

#include "csg/error.hpp"

namespace csg {

namespace {

Point primitive(Point r) {
  int g = 0;
  for (int v : r) g = std::gcd(g, v);
  if (g > 1)
    for (int& v : r) v /= g;
  return r;
}

long long cross2(const Point& a, const Point& b) {
  return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
}

bool is_unit_ray_set(int dim, const std::vector<Point>& rays) {
  if (static_cast<int>(rays.size()) != dim) return false;
  std::vector<bool> seen(static_cast<size_t>(dim), false);
  for (const Point& r : rays) {
    int axis = -1;
    for (int j = 0; j < dim; ++j) {
      if (r[static_cast<size_t>(j)] == 0) continue;
      if (r[static_cast<size_t>(j)] != 1 || axis != -1) return false;
      axis = j;
    }
    if (axis == -1 || seen[static_cast<size_t>(axis)]) return false;
    seen[static_cast<size_t>(axis)] = true;
  }
  return true;
}

}  // namespace

Cone::Cone(int dim, Kind kind, std::vector<Point> rays)
    : dim_(dim), kind_(kind), rays_(std::move(rays)) {}

Cone Cone::full(int dim) {
  if (dim < 1) fail(Errc::bad_parameters, "dimension must be >= 1");
  std::vector<Point> rays;
  for (int i = 0; i < dim; ++i) {
    Point e = zero_point(dim);
    e[static_cast<size_t>(i)] = 1;
    rays.push_back(std::move(e));
  }
  return Cone(dim, Kind::full, std::move(rays));
}

Cone Cone::make(int dim, std::vector<Point> rays) {
  if (dim < 1) fail(Errc::bad_parameters, "dimension must be >= 1");
  if (rays.empty()) fail(Errc::bad_parameters, "no rays given");
  for (Point& r : rays) {
    if (static_cast<int>(r.size()) != dim) fail(Errc::dimension_mismatch, show(r));
    for (int v : r)
      if (v < 0) fail(Errc::negative_entry, show(r));
    if (is_zero(r)) fail(Errc::zero_ray, show(r));
    r = primitive(std::move(r));
  }
  if (is_unit_ray_set(dim, rays)) return full(dim);
  if (dim != 2) fail(Errc::unsupported_cone, "only the full cone is supported for dim != 2");
  if (rays.size() != 2) fail(Errc::unsupported_cone, "a planar cone needs exactly two rays");
  long long det = cross2(rays[0], rays[1]);
  if (det == 0) fail(Errc::parallel_rays, show(rays[0]) + " " + show(rays[1]));
  if (det < 0) std::swap(rays[0], rays[1]);  // ascending angle from the first axis
  return Cone(dim, Kind::simplicial2d, std::move(rays));
}

bool Cone::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != dim_) fail(Errc::dimension_mismatch, show(x));
  for (int v : x)
    if (v < 0) return false;
  if (kind_ == Kind::full) return true;
  // x = l1*r1 + l2*r2 with l1, l2 >= 0; solve the 2x2 system over Q.
  const Point& r1 = rays_[0];
  const Point& r2 = rays_[1];
  // det > 0 after the canonical ray sort, so the coefficient signs are the
  // numerator signs.
  long long n1 = static_cast<long long>(x[0]) * r2[1] - static_cast<long long>(x[1]) * r2[0];
  long long n2 = static_cast<long long>(r1[0]) * x[1] - static_cast<long long>(r1[1]) * x[0];
  return n1 >= 0 && n2 >= 0;
}

std::vector<Point> Cone::box(const Point& f) const {
  if (!contains(f)) fail(Errc::not_in_cone, show(f));
  // f - x in C forces 0 <= x <= f componentwise, so the rectangle scan is
  // complete for both cone kinds.
  std::vector<Point> out;
  Point x = zero_point(dim_);
  for (;;) {
    if (kind_ == Kind::full || (contains(x) && contains(sub(f, x)))) out.push_back(x);
    int i = dim_ - 1;
    while (i >= 0 && x[static_cast<size_t>(i)] == f[static_cast<size_t>(i)]) {
      x[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<size_t>(i)];
  }
  return out;
}

long long Cone::box_size(const Point& f) const {
  if (kind_ == Kind::full) {
    if (!contains(f)) fail(Errc::not_in_cone, show(f));
    long long n = 1;
    for (int v : f) n *= v + 1;
    return n;
  }
  return static_cast<long long>(box(f).size());
}

Point Cone::ray_multiplicity(int i, const std::function<bool(const Point&)>& member) const {
  const Point& r = rays_[static_cast<size_t>(i)];
  for (int k = 1;; ++k) {
    Point x = scaled(k, r);
    if (member(x)) return x;
  }
}

}  // namespace csg
