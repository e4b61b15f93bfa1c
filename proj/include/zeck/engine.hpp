#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zeck/fibzeck.hpp"

namespace zeck {

// The game rewrites multisets of Fibonacci numbers, tracked as per-index
// counts.  Moves on a state holding counts c[i] of F_i:
//
//   Combine1        c[1] >= 2            two F_1 become one F_2
//   CombineAt(i)    c[i-1], c[i] >= 1    F_{i-1} and F_i become F_{i+1}, i >= 2
//   SplitAt(2)      c[2] >= 2            two F_2 become F_1 and F_3
//   SplitAt(i)      c[i] >= 2            two F_i become F_{i-2} and F_{i+1}, i >= 3
//
// SplitAt and Combine1 form the splitting class; CombineAt the combining
// class.  Play ends when no move applies, which happens exactly at the
// Zeckendorf decomposition of the conserved total value.

enum class MoveKind { Combine1, Combine, Split };

struct Move {
  MoveKind kind = MoveKind::Combine1;
  int index = 1;  // always 1 for Combine1, >= 2 otherwise

  auto operator<=>(const Move&) const = default;
};

Move combine1();
Move combine_at(int i);
Move split_at(int i);

bool is_splitting_class(const Move& m);

std::string to_string(const Move& m);    // "C1", "C4", "S2"
std::string move_rewrite(const Move& m);  // "{2 ∧ 2 → 1 ∧ 3}"

struct GameState {
  // counts[i] = how many copies of F_i are on the board; index 0 unused,
  // trailing zeros trimmed so equal states compare equal structurally.
  std::vector<std::int64_t> counts;
  std::int64_t value = 0;  // sum of counts[i] * F_i, conserved by every move

  std::int64_t count_at(int i) const {
    return i >= 1 && i < static_cast<int>(counts.size())
               ? counts[static_cast<std::size_t>(i)]
               : 0;
  }
  int top_index() const { return static_cast<int>(counts.size()) - 1; }

  bool operator==(const GameState&) const = default;
};

struct StateHash {
  std::size_t operator()(const GameState& s) const;
};

// n copies of F_1 = 1.
GameState initial_state(std::int64_t n);

// Builds a state from counts given starting at index 1 (counts_from_1[0] is
// the count of F_1).  Validates non-negativity and computes the value.
GameState state_from_counts(const std::vector<std::int64_t>& counts_from_1);

// All legal moves, in a fixed order: SplitAt ascending, then Combine1, then
// CombineAt ascending.  Deterministic strategies index into this order.
std::vector<Move> legal_moves(const GameState& s);

// Applies one move, validating legality.  Throws std::invalid_argument
// naming the violated count if the move is illegal in s.
GameState apply_move(const GameState& s, const Move& m);

// True exactly when s is the Zeckendorf decomposition of its value
// (all counts <= 1 and no two adjacent indices occupied), i.e. when
// legal_moves(s) is empty.
bool is_terminal(const GameState& s);

// Renders the board as Fibonacci values with multiplicities: "{1^3 ∧ 2^2}".
std::string to_wedge(const GameState& s);

struct MoveTally {
  // mc[i]: CombineAt(i) count for i >= 2, Combine1 count at i = 1.
  // ms[i]: SplitAt(i) count, i >= 2.  Absent index means zero.
  std::map<int, std::int64_t> mc;
  std::map<int, std::int64_t> ms;

  std::int64_t mc_at(int i) const;
  std::int64_t ms_at(int i) const;
  std::int64_t total() const;

  bool operator==(const MoveTally&) const = default;
};

// Adds one move to the tally (Combine1 counts under mc[1]).
void count_move(MoveTally& t, const Move& m);

struct Trace {
  GameState start;
  std::vector<Move> moves;  // in play order
  MoveTally tallies;
  std::int64_t length = 0;  // == moves.size()
};

// Recomputes the tally by replaying the trace from its start, validating
// every move.  Throws std::runtime_error naming the offending step if the
// replay hits an illegal move.
MoveTally tally(const Trace& t);

struct AccountingReport {
  // One (index, residual) entry per board index 1..i_max.  Index 1 is the
  // F_1 conservation balance; indices >= 2 are the per-index move/count
  // balances.  All residuals are zero for any complete legal trace.
  std::vector<std::pair<int, std::int64_t>> residuals;

  bool all_zero() const;
};

// Balance equations for a finished game.  For each index i >= 2,
//
//   MS*_{i-1} - 2 MS_i + MS_{i+2} + MC*_{i-1} - MC_i - MC_{i+1} = c_i(final) - c_i(start)
//
// where MS*_1 stands for the Combine1 tally (it behaves as a split at
// index 1), MC*_1 = 0, and any tally at index < 2 or >= i_max reads as zero
// (moves there are impossible on a board of this value).  Index 1 balances
// the F_1 count: c_1(start) - 2 MC_1 - MC_2 + MS_2 + MS_3 = c_1(final).
AccountingReport check_accounting(const MoveTally& t, const GameState& start,
                                  const GameState& final_state);

// Same, for the standard game: start = all ones, final = the Zeckendorf
// decomposition described by the profile.
AccountingReport check_accounting(const MoveTally& t,
                                  const ZeckendorfProfile& profile);

}  // namespace zeck
