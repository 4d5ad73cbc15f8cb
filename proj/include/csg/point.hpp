#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csg {

// Lattice point in N^p. Arithmetic helpers may produce negative entries
// (differences); cone membership is what decides validity, not the type.
using Point = std::vector<int>;

inline Point zero_point(int dim) { return Point(static_cast<size_t>(dim), 0); }

inline bool is_zero(const Point& x) {
  for (int v : x)
    if (v != 0) return false;
  return true;
}

inline Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point scaled(int k, const Point& a) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

// componentwise a <= b
inline bool dominated(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string show(const Point& x);  // "(a,b)"

struct PointHash {
  size_t operator()(const Point& x) const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : x) h = h * 1099511628211ULL + static_cast<size_t>(v + 0x7fffffff);
    return h;
  }
};

}  // namespace csg
