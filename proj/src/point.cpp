#include "csg/point.hpp"

namespace csg {

std::string show(const Point& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  s += ')';
  return s;
}

}  // namespace csg
