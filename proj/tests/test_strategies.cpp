#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "zeck/prng.hpp"
#include "zeck/strategies.hpp"

using namespace zeck;

TEST_CASE("strategy names round-trip") {
  for (StrategyKind k :
       {StrategyKind::CombineLargest, StrategyKind::SplitLargest,
        StrategyKind::SplitSmallest, StrategyKind::GreedyLongest,
        StrategyKind::GreedyLongestSeeded}) {
    const auto s = strategy_from_name(strategy_name(k), 7);
    REQUIRE(s.has_value());
    CHECK(s->kind == k);
    CHECK(s->seed == 7);
  }
  CHECK_FALSE(strategy_from_name("split-biggest", 0).has_value());
  CHECK(strategy_name(StrategyKind::GreedyLongest) == "greedy");
}

TEST_CASE("priority orders on hand-built states") {
  // split-smallest: splits precede adding 1's
  CHECK(next_move({StrategyKind::SplitSmallest}, state_from_counts({2, 2})) ==
        split_at(2));
  // combine-largest: consecutive combines precede adding 1's
  CHECK(next_move({StrategyKind::CombineLargest}, state_from_counts({2, 1})) ==
        combine_at(2));
  // greedy: no splitting-class move, so smallest combine
  CHECK(next_move({StrategyKind::GreedyLongest}, state_from_counts({1, 1})) ==
        combine_at(2));
  // greedy: Combine1 counts as the index-1 split, so it precedes SplitAt(2)
  CHECK(next_move({StrategyKind::GreedyLongest}, state_from_counts({2, 2})) ==
        combine1());
  // split-largest takes the largest split first, then the largest combine
  const GameState s = state_from_counts({2, 2, 2, 1});
  CHECK(next_move({StrategyKind::SplitLargest}, s) == split_at(3));
  CHECK(next_move({StrategyKind::SplitLargest}, state_from_counts({2, 1, 1})) ==
        combine_at(3));
  CHECK(next_move({StrategyKind::SplitLargest}, state_from_counts({2})) ==
        combine1());
  // combine-largest falls back to the largest split, then Combine1
  CHECK(next_move({StrategyKind::CombineLargest}, state_from_counts({0, 2, 0, 2})) ==
        split_at(4));
  CHECK(next_move({StrategyKind::CombineLargest}, initial_state(4)) ==
        combine1());
  CHECK_THROWS_AS(next_move({StrategyKind::GreedyLongest}, initial_state(1)),
                  std::invalid_argument);
}

TEST_CASE("seeded greedy demands its rng and picks splitting-class moves") {
  const GameState s = state_from_counts({2, 2});
  CHECK_THROWS_AS(next_move({StrategyKind::GreedyLongestSeeded, 1}, s, nullptr),
                  std::invalid_argument);
  std::mt19937_64 rng(42);
  std::set<Move> seen;
  for (int k = 0; k < 200; ++k)
    seen.insert(next_move({StrategyKind::GreedyLongestSeeded, 0}, s, &rng));
  CHECK(seen == std::set<Move>{split_at(2), combine1()});
  // with only combines available the fallback is deterministic
  CHECK(next_move({StrategyKind::GreedyLongestSeeded, 0},
                  state_from_counts({1, 1}), &rng) == combine_at(2));
}

TEST_CASE("simulated game lengths on small boards") {
  CHECK(simulate(initial_state(4), {StrategyKind::SplitSmallest}).length == 3);
  CHECK(simulate(initial_state(4), {StrategyKind::CombineLargest}).length == 2);
  CHECK(simulate(initial_state(4), {StrategyKind::SplitLargest}).length == 2);
  CHECK(simulate(initial_state(4), {StrategyKind::GreedyLongest}).length == 3);
  CHECK(simulate(initial_state(2), {StrategyKind::SplitSmallest}).length == 1);
  CHECK(simulate(initial_state(1), {StrategyKind::GreedyLongest}).length == 0);
  CHECK(simulate(initial_state(5), {StrategyKind::GreedyLongest}).length == 5);
}

TEST_CASE("simulation fills the trace consistently") {
  const Trace tr = simulate(initial_state(12), {StrategyKind::SplitSmallest});
  CHECK(tr.length == static_cast<std::int64_t>(tr.moves.size()));
  CHECK(tally(tr) == tr.tallies);
  GameState cur = tr.start;
  for (const Move& m : tr.moves) cur = apply_move(cur, m);
  CHECK(is_terminal(cur));
  CHECK(cur.value == 12);
}

TEST_CASE("seeded simulations are reproducible per seed") {
  const Trace a = simulate(initial_state(60), {StrategyKind::GreedyLongestSeeded, 11});
  const Trace b = simulate(initial_state(60), {StrategyKind::GreedyLongestSeeded, 11});
  CHECK(a.moves == b.moves);
  const Trace c = simulate(initial_state(60), {StrategyKind::GreedyLongestSeeded, 12});
  CHECK(a.length == c.length);  // same length even when the path differs
}

TEST_CASE("uniform_below is unbiased over its range and deterministic") {
  std::mt19937_64 rng(123);
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 1000; ++k) {
    const std::uint64_t v = uniform_below(rng, 5);
    CHECK(v < 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
  std::mt19937_64 r1(9), r2(9);
  for (int k = 0; k < 100; ++k)
    CHECK(uniform_below(r1, 7) == uniform_below(r2, 7));
}

TEST_CASE("splitmix64 matches its reference stream") {
  // reference values for the classic splitmix64 finalizer at x+gamma
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(1) != splitmix64(2));
}
