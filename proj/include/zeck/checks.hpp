#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeck/solver.hpp"

namespace zeck::checks {

// Sweep ranges for the property suite.  The defaults are the ranges the
// project commits to; shrink them for quick runs.
struct Limits {
  std::int64_t zeck_max_n = 100000;   // decomposition and bound-order sweeps
  std::int64_t sim_max_n = 10000;     // combine-first shortest-length sweep
  std::int64_t acct_max_n = 1000;     // per-strategy trace identity sweep
  std::int64_t greedy_max_n = 500;    // seeded-greedy uniqueness sweep
  int greedy_trials = 100;
  std::int64_t solver_max_n = 30;     // full game-DAG sweeps
  std::int64_t winner_max_n = 25;     // winner parity range
  std::int64_t split_only_max_n = 50; // splitting-class-only searches
  int pair_lemma_max_k = 10;          // pair availability at n = F_k - 1
  std::int64_t random_path_max_n = 20;
  int random_paths_per_n = 50;
  std::size_t state_cap = kDefaultStateCap;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The full invariant suite, one result per property, in a stable order.
// Throws StateCapExceeded if an exhaustive sweep outgrows limits.state_cap.
std::vector<CheckResult> run_verify(const Limits& limits);

// The eleven acceptance criteria at the limits' ranges, one result each.
std::vector<CheckResult> run_acceptance(const Limits& limits);

}  // namespace zeck::checks
