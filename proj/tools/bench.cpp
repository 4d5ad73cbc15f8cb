// Times the frontier-expansion kernels with the serial reference path and the
// OpenMP path, checks that both produce identical results, and prints a table.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "csg/boxed.hpp"
#include "csg/enumeration.hpp"
#include "csg/order.hpp"
#include "csg/parallel.hpp"
#include "csg/partition.hpp"

using namespace csg;

namespace {

template <typename F>
double ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial << " ms" << std::setw(10)
            << parallel << " ms" << std::setw(8) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "x   "
            << (equal ? "outputs equal" : "OUTPUTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  long long gmax = argc > 1 ? std::atoll(argv[1]) : 8;
  Ctx ctx = deglex_context(2);
  std::cout << "threads available: " << max_threads() << ", census bound: " << gmax << "\n\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << std::setw(9) << "speedup" << "\n";

  {
    std::vector<std::pair<long long, long long>> a, b;
    double ts = ms([&] { a = boxed_census(ctx, gmax, Exec::serial); });
    double tp = ms([&] { b = boxed_census(ctx, gmax, Exec::parallel); });
    report("boxed census", ts, tp, a == b);
  }
  {
    std::vector<CSemigroup> a, b;
    double ts = ms([&] { a = enumerate_genus(ctx, 6, Exec::serial); });
    double tp = ms([&] { b = enumerate_genus(ctx, 6, Exec::parallel); });
    report("genus enumeration (g=6)", ts, tp, a == b);
  }
  {
    Point f{3, 2};
    std::vector<CSemigroup> a, b;
    double ts = ms([&] { a = enumerate_frobenius(ctx, f, Exec::serial); });
    double tp = ms([&] { b = enumerate_frobenius(ctx, f, Exec::parallel); });
    report("Frobenius fiber f=(3,2)", ts, tp, a == b);
  }
  {
    Point f{2, 3};
    std::vector<CSemigroup> a, b;
    GenusRange r = genus_range(*ctx, f);
    double ts = ms([&] { a = enumerate_fb_genus(ctx, f, r.lo, Exec::serial); });
    double tp = ms([&] { b = enumerate_fb_genus(ctx, f, r.lo, Exec::parallel); });
    report("deep fb-genus descent", ts, tp, a == b);
  }
  return 0;
}
