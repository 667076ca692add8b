// Serial vs OpenMP timings for the brute-force oracles.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "degreecalc/verify.hpp"

using namespace degreecalc;

namespace {

double best_of(int reps, const std::function<DegreeSet()>& f, std::size_t& size) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    size = f().size();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, const std::function<DegreeSet()>& serial,
         const std::function<DegreeSet()>& parallel) {
  std::size_t ns = 0, np = 0;
  const double ts = best_of(3, serial, ns);
  const double tp = best_of(3, parallel, np);
  std::printf("%-34s %10.4f %10.4f %7.2fx  |set| %zu%s\n", name, ts, tp, ts / tp, ns,
              ns == np ? "" : "  MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "workload", "serial s", "omp s", "speedup");

  OracleConfig cfg;
  cfg.enum_cap = 100'000'000;

  const std::vector<std::int64_t> d{1, 7, 31, 127, 511, 2047};
  const std::vector<std::int64_t> n{7, 7, 7, 7, 7, 7};
  const std::vector<std::int64_t> np{7, 7, 7, 7, 7, 6};
  row("sumset, 6 terms, 1.06e7 tuples", [&] { return brute_sumset_serial(d, n, np, cfg); },
      [&] { return brute_sumset(d, n, np, cfg); });

  const std::vector<std::int64_t> d4{3, 10, 100, 1000};
  const std::vector<std::int64_t> n4{20, 20, 20, 20};
  row("sumset, 4 terms, 3.9e6 tuples", [&] { return brute_sumset_serial(d4, n4, n4); },
      [&] { return brute_sumset(d4, n4, n4); });

  const std::vector<std::int64_t> g{1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 11};
  row("subset products, 22 values", [&] { return brute_subset_products_serial(g); },
      [&] { return brute_subset_products(g); });
  return 0;
}
