#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "zeck/engine.hpp"

namespace zeck {

// Move-selection policies, each a priority order over the legal moves:
//
//   CombineLargest      combines descending, Combine1, splits descending
//   SplitLargest        splits descending, combines descending, Combine1
//   SplitSmallest       splits ascending, Combine1, combines ascending
//   GreedyLongest       any splitting-class move (lowest index first,
//                       Combine1 counting as index 1), else lowest combine
//   GreedyLongestSeeded uniform seeded pick among splitting-class moves,
//                       else lowest combine
enum class StrategyKind {
  CombineLargest,
  SplitLargest,
  SplitSmallest,
  GreedyLongest,
  GreedyLongestSeeded,
};

struct Strategy {
  StrategyKind kind = StrategyKind::GreedyLongest;
  std::uint64_t seed = 0;  // consumed by GreedyLongestSeeded only
};

// CLI names: combine-largest, split-largest, split-smallest, greedy,
// greedy-seeded.
std::string_view strategy_name(StrategyKind kind);
std::optional<Strategy> strategy_from_name(std::string_view name,
                                           std::uint64_t seed = 0);

// Picks the strategy's move in a non-terminal state.  GreedyLongestSeeded
// draws from *rng, which the simulation driver owns for the whole game;
// passing it is mandatory for that kind and ignored for the others.
Move next_move(const Strategy& st, const GameState& s,
               std::mt19937_64* rng = nullptr);

// Plays a full game from start, recording moves and tallies.  The move cap
// 10 * value + 100 can only fire on a rules bug and throws
// std::runtime_error.
Trace simulate(const GameState& start, const Strategy& st);

}  // namespace zeck
