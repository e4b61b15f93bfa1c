#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "zeck/engine.hpp"

namespace zeck {

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

// Thrown when an exhaustive search touches more distinct states than the
// caller allowed.
class StateCapExceeded : public std::runtime_error {
 public:
  StateCapExceeded(std::size_t visited, std::size_t cap)
      : std::runtime_error("state cap exceeded: visited " +
                           std::to_string(visited) + " states, cap " +
                           std::to_string(cap)),
        visited_(visited) {}
  std::size_t visited() const { return visited_; }

 private:
  std::size_t visited_;
};

enum class Winner { Player1, Player2, None };

std::string_view to_string(Winner w);

struct GameGraphStats {
  std::int64_t n = 0;
  std::int64_t longest = 0;
  std::int64_t shortest = 0;
  std::size_t states = 0;  // distinct reachable states, terminal included
  Winner winner = Winner::None;
};

// Exhaustive memoized traversal of the full game DAG from the all-ones
// board: longest and shortest completion, reachable-state count, and the
// winner under alternating play where whoever moves last wins.  The
// traversal also proves acyclicity by rejecting back-edges.  n = 1 starts
// terminal and reports Winner::None.
GameGraphStats explore(std::int64_t n, std::size_t state_cap = kDefaultStateCap);

// Every distinct reachable state, in breadth-first discovery order.
std::vector<GameState> reachable_states(std::int64_t n,
                                        std::size_t state_cap = kDefaultStateCap);

struct SplitOnlyStats {
  std::int64_t n = 0;
  bool feasible = false;   // some all-splitting-class play finishes the game
  std::size_t states = 0;  // states reachable using splitting moves only
  int max_gap = 0;         // largest index gap between adjacent summands seen
  std::size_t dead_ends = 0;  // non-terminal states with no splitting move
};

// Search restricted to the splitting class (SplitAt and Combine1).
SplitOnlyStats split_only_explore(std::int64_t n,
                                  std::size_t state_cap = kDefaultStateCap);
bool split_only_feasible(std::int64_t n,
                         std::size_t state_cap = kDefaultStateCap);

// Distinct lengths over `trials` seeded-greedy games; trial t plays with
// seed splitmix64(seed + t).
std::set<std::int64_t> greedy_length_census(std::int64_t n, int trials,
                                            std::uint64_t seed);

}  // namespace zeck
