// Serial vs OpenMP kernel comparison on the row-fill and box-fill loops.
#include <chrono>
#include <cstdio>

#include "veccomp/counting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace veccomp;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_rows(const char* label, const WeightFunction& f, int k,
                const MultiIndex& box, const Modulus* mod) {
  Support support = f.support_within(box);
  double times[2] = {0, 0};
  Kernel kernels[2] = {Kernel::Serial, Kernel::Parallel};
  BigInt cross[2];
  for (int which = 0; which < 2; ++which) {
    auto start = Clock::now();
    BoxTable cur(box), next(box);
    cur.at(MultiIndex::zeros(box.dim())) = reduced(BigInt(1), mod);
    for (int step = 0; step < k; ++step) {
      kernels::next_row(next, cur, support, mod, kernels[which]);
      std::swap(cur, next);
    }
    times[which] = ms_since(start);
    cross[which] = cur.at(box);
  }
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   %s\n",
              label, times[0], times[1], times[0] / times[1],
              cross[0] == cross[1] ? "values agree" : "MISMATCH");
}

void bench_open(const char* label, const WeightFunction& f, const MultiIndex& box,
                const Modulus* mod) {
  double times[2] = {0, 0};
  Kernel kernels[2] = {Kernel::Serial, Kernel::Parallel};
  BigInt cross[2];
  for (int which = 0; which < 2; ++which) {
    auto start = Clock::now();
    cross[which] = composition_count(box, f, mod, kernels[which]);
    times[which] = ms_since(start);
  }
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   %s\n",
              label, times[0], times[1], times[0] / times[1],
              cross[0] == cross[1] ? "values agree" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  WeightFunction del = WeightFunction::indicator(
      2, {MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}});
  WeightFunction onetwo3 = WeightFunction::indicator(
      3, {MultiIndex{1, 1, 1}, MultiIndex{1, 1, 2}, MultiIndex{1, 2, 1},
          MultiIndex{1, 2, 2}, MultiIndex{2, 1, 1}, MultiIndex{2, 1, 2},
          MultiIndex{2, 2, 1}, MultiIndex{2, 2, 2}});
  Modulus mod(1000000007);

  bench_rows("row fill exact (160,160)", del, 60, MultiIndex{160, 160}, nullptr);
  bench_rows("row fill mod p (400,400)", del, 80, MultiIndex{400, 400}, &mod);
  bench_open("box fill exact (120,120)", del, MultiIndex{120, 120}, nullptr);
  bench_open("box fill 3d mod p (60^3)", onetwo3, MultiIndex{60, 60, 60}, &mod);
  return 0;
}
