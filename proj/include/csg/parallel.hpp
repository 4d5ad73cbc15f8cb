#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csg {

// Execution policy for the frontier-expansion kernels. Both paths produce the
// same output in the same order; the serial one is the reference the parallel
// one is tested against.
enum class Exec { serial, parallel };

// Map fn over [0, n) collecting per-index result vectors, concatenated in
// index order. The OpenMP path parallelizes over indices; determinism comes
// from the ordered concatenation, not the schedule.
template <class Out, class Fn>
std::vector<Out> ordered_flat_map(size_t n, Fn&& fn, Exec exec) {
  std::vector<std::vector<Out>> parts(n);
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      parts[static_cast<size_t>(i)] = fn(static_cast<size_t>(i));
  } else
#endif
  {
    (void)exec;
    for (size_t i = 0; i < n; ++i) parts[i] = fn(i);
  }
  size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Out> out;
  out.reserve(total);
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

// Serial reference with identical semantics, kept separate so tests and the
// benchmark can compare the two directly.
template <class Out, class Fn>
std::vector<Out> ordered_flat_map_serial(size_t n, Fn&& fn) {
  return ordered_flat_map<Out>(n, std::forward<Fn>(fn), Exec::serial);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace csg
