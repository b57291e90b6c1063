// Compares the OpenMP paths against their serial reference implementations:
// the count-table extension step (parallel gather vs. serial scatter) and
// the Monte Carlo sampler (worker substreams vs. a single loop). Results
// must be bit-identical; this reports wall time only.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rankedtree/count_table.hpp"
#include "rankedtree/simulate.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double milliseconds_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

void bench_count_tables(int max_m) {
  using rankedtree::JointCountTable;
  const auto run =
      [&](JointCountTable (*step)(const JointCountTable&)) {
        JointCountTable table = JointCountTable::initial();
        for (int m = 1; m < max_m; ++m) {
          table = step(table);
        }
        return table;
      };

  const auto serial_start = Clock::now();
  const JointCountTable serial = run(rankedtree::extend_counts);
  const double serial_ms = milliseconds_since(serial_start);

  const auto parallel_start = Clock::now();
  const JointCountTable parallel = run(rankedtree::extend_counts_parallel);
  const double parallel_ms = milliseconds_since(parallel_start);

  if (!(serial == parallel)) {
    std::printf("count-table paths DIVERGED at m=%d\n", max_m);
  }
  const std::string label = "count tables to m=" + std::to_string(max_m);
  report(label.c_str(), serial_ms, parallel_ms);
}

void bench_sampler(int n, std::int64_t samples, int workers) {
  rankedtree::SimConfig config;
  config.n = n;
  config.samples = samples;
  config.seed = 99;
  config.workers = workers;

  const auto serial_start = Clock::now();
  const auto serial = rankedtree::estimate_statistics_serial(config);
  const double serial_ms = milliseconds_since(serial_start);

  const auto parallel_start = Clock::now();
  const auto parallel = rankedtree::estimate_statistics(config);
  const double parallel_ms = milliseconds_since(parallel_start);

  if (!(serial == parallel)) {
    std::printf("sampler paths DIVERGED at n=%d\n", n);
  }
  const std::string label = "sampler n=" + std::to_string(n) + " x" +
                            std::to_string(samples);
  report(label.c_str(), serial_ms, parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both paths run single-threaded\n");
#endif
  bench_count_tables(400);
  bench_count_tables(800);
  bench_sampler(54, 200000, 8);
  bench_sampler(500, 40000, 8);
  return 0;
}
