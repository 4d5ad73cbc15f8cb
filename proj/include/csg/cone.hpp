#pragma once

#include <functional>
#include <vector>

#include "csg/point.hpp"

namespace csg {

// Integer cone C: either all of N^p ("full") or the lattice points of the
// planar region between two non-parallel primitive rays in N^2
// ("simplicial 2d"). Immutable after construction.
class Cone {
 public:
  enum class Kind { full, simplicial2d };

  static Cone full(int dim);
  // Validates, reduces rays to primitive form and sorts them canonically
  // (by angle from the first axis in 2d, coordinate order for unit rays).
  static Cone make(int dim, std::vector<Point> rays);

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  bool is_full() const { return kind_ == Kind::full; }
  const std::vector<Point>& rays() const { return rays_; }

  bool contains(const Point& x) const;

  // {x in C : f - x in C}, listed in plain lex order on coordinates.
  // Both memberships are checked over the bounding rectangle of f;
  // f - x in C forces 0 <= x <= f componentwise, so the scan is complete.
  std::vector<Point> box(const Point& f) const;
  long long box_size(const Point& f) const;

  // Least positive multiple of ray i that `member` accepts.
  Point ray_multiplicity(int i, const std::function<bool(const Point&)>& member) const;

  bool operator==(const Cone& o) const { return dim_ == o.dim_ && rays_ == o.rays_; }

 private:
  Cone(int dim, Kind kind, std::vector<Point> rays);

  int dim_;
  Kind kind_;
  std::vector<Point> rays_;
};

}  // namespace csg
