// Times the OpenMP oracle kernels against the serial reference on growing
// grids, then reports solver throughput on a benchmark-grid batch. The two
// oracle paths must return identical equilibrium lists; the run aborts if
// they ever disagree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cng/instance_gen.hpp"
#include "cng/metrics.hpp"
#include "cng/oracle.hpp"
#include "cng/zero_regrets.hpp"

using namespace cng;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 10;
  if (argc > 1) max_n = std::atoi(argv[1]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  std::printf("\nequilibrium enumeration, parallel kernels vs serial reference\n");
  std::printf("%4s %12s %14s %10s %8s\n", "n", "parallel(s)", "reference(s)", "speedup",
              "NEs");
  for (int n = 6; n <= max_n; ++n) {
    GenSpec spec;
    spec.n = n;
    spec.gamma = 0.1;
    spec.eta = 0.6;
    spec.defender_budget_frac = 0.75;
    spec.attacker_budget_frac = 0.30;
    spec.seed = 1000 + n;
    const CngInstance instance = generate(spec);
    oracle::Options options;
    options.equilibria_cap = n;
    options.enumerate_cap = n;

    const auto t0 = Clock::now();
    const auto parallel = oracle::all_exact_ne(instance, options);
    const double parallel_s = seconds_since(t0);

    const auto t1 = Clock::now();
    const auto serial = oracle::reference::all_exact_ne(instance, options);
    const double serial_s = seconds_since(t1);

    if (parallel.size() != serial.size()) {
      std::fprintf(stderr, "MISMATCH at n=%d: %zu vs %zu equilibria\n", n,
                   parallel.size(), serial.size());
      return 1;
    }
    for (std::size_t k = 0; k < parallel.size(); ++k) {
      if (!(parallel[k] == serial[k])) {
        std::fprintf(stderr, "MISMATCH at n=%d, entry %zu\n", n, k);
        return 1;
      }
    }
    std::printf("%4d %12.4f %14.4f %9.2fx %8zu\n", n, parallel_s, serial_s,
                serial_s / std::max(parallel_s, 1e-9), parallel.size());
  }

  std::printf("\nsolver throughput on the benchmark grid (24 instances per size)\n");
  std::printf("%4s %10s %10s %10s\n", "n", "solved", "proved", "total(s)");
  for (int n : {10, 25}) {
    const auto t0 = Clock::now();
    int proved = 0, solved = 0;
    for (const GenSpec& spec : paper_grid(n, 9000)) {
      const CngInstance instance = generate(spec);
      SolveConfig config;
      config.time_limit_s = 100.0;
      const EquilibriumResult result = solve(instance, config);
      ++solved;
      if (result.status == SolveStatus::ProvedOptimalNe) ++proved;
    }
    std::printf("%4d %10d %10d %10.2f\n", n, solved, proved, seconds_since(t0));
  }
  return 0;
}
