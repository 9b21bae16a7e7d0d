// Serial vs OpenMP throughput for the two data-parallel kernels: discrete
// complex cell counting and the randomized planner validity sweep.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wedge/discrete_complex.hpp"
#include "wedge/probes.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_complex(int k) {
  const wedge::Graph g = wedge::subdivided_wedge(k);
  const auto t0 = Clock::now();
  const auto serial = wedge::build_complex_serial(g, k);
  const double serial_ms = ms_since(t0);
  const auto t1 = Clock::now();
  const auto parallel = wedge::build_complex(g, k);
  const double parallel_ms = ms_since(t1);
  const bool same = serial.euler == parallel.euler &&
                    serial.square_cells == parallel.square_cells;
  std::printf("complex k=%-4d  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n",
              k, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              same ? "counts agree" : "COUNTS DIFFER");
}

void bench_sweep(int trials) {
  wedge::SuiteOptions options;
  options.trials = trials;
  options.seed = 7;
  options.parallel = false;
  const auto t0 = Clock::now();
  const auto serial = wedge::run_validity_suite(options);
  const double serial_ms = ms_since(t0);
  options.parallel = true;
  const auto t1 = Clock::now();
  const auto parallel = wedge::run_validity_suite(options);
  const double parallel_ms = ms_since(t1);
  const bool same = serial.failures.size() == parallel.failures.size() &&
                    serial.max_endpoint_error == parallel.max_endpoint_error &&
                    serial.max_total_length == parallel.max_total_length;
  std::printf("sweep  n=%-5d serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n",
              trials, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              same ? "reports agree" : "REPORTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  if (quick) {
    bench_complex(16);
    bench_sweep(200);
    return 0;
  }
  for (int k : {32, 64, 128, 256}) bench_complex(k);
  for (int trials : {2000, 10000}) bench_sweep(trials);
  return 0;
}
