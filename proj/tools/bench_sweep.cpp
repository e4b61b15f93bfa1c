// Times the parallel table sweep against the serial reference and checks
// that both produce identical rows.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeck/sweep.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t max_n = 2000;
  if (argc > 1) max_n = std::strtoll(argv[1], nullptr, 10);
  if (max_n < 1) {
    std::cerr << "usage: zeckgame-bench [max_n]\n";
    return 2;
  }
  zeck::SweepOptions opt;
  opt.solver_max_n = 25;

#ifdef _OPENMP
  const int workers = omp_get_max_threads();
#else
  const int workers = 1;
#endif
  std::cout << "table sweep over n in [1, " << max_n << "], brute-force columns up to n="
            << opt.solver_max_n << ", " << workers << " worker(s)\n";

  const auto t0 = std::chrono::steady_clock::now();
  const auto serial = zeck::compute_rows_serial(1, max_n, opt);
  const double ts = seconds_since(t0);
  std::cout << "serial reference: " << ts << " s\n";

  const auto t1 = std::chrono::steady_clock::now();
  const auto parallel = zeck::compute_rows(1, max_n, opt);
  const double tp = seconds_since(t1);
  std::cout << "parallel sweep:   " << tp << " s\n";

  if (serial.size() != parallel.size()) {
    std::cerr << "row count mismatch\n";
    return 1;
  }
  for (std::size_t k = 0; k < serial.size(); ++k)
    if (!(serial[k] == parallel[k])) {
      std::cerr << "row mismatch at n=" << serial[k].n << "\n";
      return 1;
    }
  std::cout << "rows identical; speedup " << (tp > 0 ? ts / tp : 0.0) << "x\n";
  return 0;
}
