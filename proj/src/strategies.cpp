#include "zeck/strategies.hpp"

#include <stdexcept>

#include "zeck/prng.hpp"

namespace zeck {

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::CombineLargest: return "combine-largest";
    case StrategyKind::SplitLargest: return "split-largest";
    case StrategyKind::SplitSmallest: return "split-smallest";
    case StrategyKind::GreedyLongest: return "greedy";
    case StrategyKind::GreedyLongestSeeded: return "greedy-seeded";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name,
                                           std::uint64_t seed) {
  for (StrategyKind k :
       {StrategyKind::CombineLargest, StrategyKind::SplitLargest,
        StrategyKind::SplitSmallest, StrategyKind::GreedyLongest,
        StrategyKind::GreedyLongestSeeded})
    if (name == strategy_name(k)) return Strategy{k, seed};
  return std::nullopt;
}

Move next_move(const Strategy& st, const GameState& s, std::mt19937_64* rng) {
  // legal_moves lists splits ascending, then Combine1, then combines
  // ascending; every policy below is a view over that order.
  const std::vector<Move> moves = legal_moves(s);
  if (moves.empty())
    throw std::invalid_argument("next_move: state is terminal");

  std::size_t splits_end = 0;
  while (splits_end < moves.size() && moves[splits_end].kind == MoveKind::Split)
    ++splits_end;
  std::size_t c1_end = splits_end;
  if (c1_end < moves.size() && moves[c1_end].kind == MoveKind::Combine1)
    ++c1_end;
  const bool have_splits = splits_end > 0;
  const bool have_c1 = c1_end > splits_end;
  const bool have_combines = c1_end < moves.size();

  switch (st.kind) {
    case StrategyKind::CombineLargest:
      if (have_combines) return moves.back();
      if (have_c1) return moves[splits_end];
      return moves[splits_end - 1];
    case StrategyKind::SplitLargest:
      if (have_splits) return moves[splits_end - 1];
      if (have_combines) return moves.back();
      return moves[splits_end];
    case StrategyKind::SplitSmallest:
      if (have_splits) return moves.front();
      if (have_c1) return moves[splits_end];
      return moves[c1_end];
    case StrategyKind::GreedyLongest:
      // Combine1 counts as a split at index 1, so it wins every tie.
      if (have_c1) return moves[splits_end];
      if (have_splits) return moves.front();
      return moves[c1_end];
    case StrategyKind::GreedyLongestSeeded: {
      if (rng == nullptr)
        throw std::invalid_argument(
            "next_move: greedy-seeded requires the simulation's rng");
      if (c1_end > 0)
        return moves[uniform_below(*rng, c1_end)];
      return moves[c1_end];
    }
  }
  throw std::logic_error("next_move: unknown strategy kind");
}

Trace simulate(const GameState& start, const Strategy& st) {
  std::optional<std::mt19937_64> rng;
  if (st.kind == StrategyKind::GreedyLongestSeeded) rng.emplace(st.seed);

  Trace tr;
  tr.start = start;
  GameState cur = start;
  const std::int64_t cap = 10 * start.value + 100;
  while (!is_terminal(cur)) {
    if (static_cast<std::int64_t>(tr.moves.size()) >= cap)
      throw std::runtime_error(
          "simulate: move cap exceeded, the game failed to terminate");
    const Move m = next_move(st, cur, rng ? &*rng : nullptr);
    cur = apply_move(cur, m);
    tr.moves.push_back(m);
    count_move(tr.tallies, m);
  }
  tr.length = static_cast<std::int64_t>(tr.moves.size());
  return tr;
}

}  // namespace zeck
