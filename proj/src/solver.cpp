#include "zeck/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "zeck/prng.hpp"
#include "zeck/strategies.hpp"

namespace zeck {

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::Player1: return "Player1";
    case Winner::Player2: return "Player2";
    case Winner::None: return "None";
  }
  return "?";
}

namespace {

struct NodeVal {
  std::int64_t longest = 0;
  std::int64_t shortest = 0;
  bool mover_wins = false;
};

// Accumulates children of a node still on the depth-first stack.
struct Acc {
  std::int64_t longest = -1;
  std::int64_t shortest = std::numeric_limits<std::int64_t>::max();
  bool any_child_loses = false;

  void fold(const NodeVal& child) {
    longest = std::max(longest, child.longest);
    shortest = std::min(shortest, child.shortest);
    any_child_loses |= !child.mover_wins;
  }
};

struct Frame {
  GameState state;
  std::vector<Move> moves;
  std::size_t next = 0;
  Acc acc;
};

}  // namespace

GameGraphStats explore(std::int64_t n, std::size_t state_cap) {
  std::unordered_map<GameState, NodeVal, StateHash> done;
  std::unordered_set<GameState, StateHash> open;  // on the current DFS path

  std::vector<Frame> stack;
  auto push = [&](GameState&& s) {
    if (done.size() + open.size() >= state_cap)
      throw StateCapExceeded(done.size() + open.size() + 1, state_cap);
    Frame f;
    f.moves = legal_moves(s);
    open.insert(s);
    f.state = std::move(s);
    stack.push_back(std::move(f));
  };
  push(initial_state(n));

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.moves.size()) {
      GameState child = apply_move(f.state, f.moves[f.next]);
      ++f.next;
      if (auto it = done.find(child); it != done.end()) {
        f.acc.fold(it->second);
        continue;
      }
      if (open.contains(child))
        // A move re-entered the current path; the game would be cyclic.
        throw std::logic_error("explore: state repeated along a path");
      push(std::move(child));
    } else {
      NodeVal v;
      if (f.moves.empty()) {
        v = {0, 0, false};  // terminal: the player to move already lost
      } else {
        v.longest = f.acc.longest + 1;
        v.shortest = f.acc.shortest + 1;
        v.mover_wins = f.acc.any_child_loses;
      }
      open.erase(f.state);
      done.emplace(std::move(f.state), v);
      stack.pop_back();
      if (!stack.empty()) stack.back().acc.fold(v);
    }
  }

  const NodeVal root = done.at(initial_state(n));
  GameGraphStats st;
  st.n = n;
  st.longest = root.longest;
  st.shortest = root.shortest;
  st.states = done.size();
  if (is_terminal(initial_state(n)))
    st.winner = Winner::None;
  else
    st.winner = root.mover_wins ? Winner::Player1 : Winner::Player2;
  return st;
}

std::vector<GameState> reachable_states(std::int64_t n, std::size_t state_cap) {
  std::vector<GameState> out;
  std::unordered_set<GameState, StateHash> seen;
  std::deque<GameState> queue;
  queue.push_back(initial_state(n));
  seen.insert(queue.back());
  while (!queue.empty()) {
    GameState s = std::move(queue.front());
    queue.pop_front();
    for (const Move& m : legal_moves(s)) {
      GameState child = apply_move(s, m);
      if (seen.contains(child)) continue;
      if (seen.size() >= state_cap)
        throw StateCapExceeded(seen.size() + 1, state_cap);
      seen.insert(child);
      queue.push_back(std::move(child));
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<Move> splitting_moves(const GameState& s) {
  std::vector<Move> out = legal_moves(s);
  std::erase_if(out, [](const Move& m) { return !is_splitting_class(m); });
  return out;
}

int max_index_gap(const GameState& s) {
  int gap = 0, prev = 0;
  for (int i = 1; i <= s.top_index(); ++i) {
    if (s.counts[i] == 0) continue;
    if (prev != 0) gap = std::max(gap, i - prev);
    prev = i;
  }
  return gap;
}

struct SplitOnlyFrame {
  GameState state;
  std::vector<Move> moves;
  std::size_t next = 0;
  bool feasible = false;
};

}  // namespace

SplitOnlyStats split_only_explore(std::int64_t n, std::size_t state_cap) {
  SplitOnlyStats st;
  st.n = n;

  std::unordered_map<GameState, bool, StateHash> done;  // state -> feasible
  std::unordered_set<GameState, StateHash> open;

  std::vector<SplitOnlyFrame> stack;
  auto push = [&](GameState&& s) {
    if (done.size() + open.size() >= state_cap)
      throw StateCapExceeded(done.size() + open.size() + 1, state_cap);
    st.max_gap = std::max(st.max_gap, max_index_gap(s));
    SplitOnlyFrame f;
    f.moves = splitting_moves(s);
    if (f.moves.empty() && !is_terminal(s)) st.dead_ends += 1;
    open.insert(s);
    f.state = std::move(s);
    stack.push_back(std::move(f));
  };
  push(initial_state(n));

  while (!stack.empty()) {
    SplitOnlyFrame& f = stack.back();
    if (f.next < f.moves.size()) {
      GameState child = apply_move(f.state, f.moves[f.next]);
      ++f.next;
      if (auto it = done.find(child); it != done.end()) {
        f.feasible |= it->second;
        continue;
      }
      if (open.contains(child))
        throw std::logic_error("split_only_explore: cycle");
      push(std::move(child));
    } else {
      const bool feasible = f.moves.empty() ? is_terminal(f.state) : f.feasible;
      open.erase(f.state);
      done.emplace(std::move(f.state), feasible);
      stack.pop_back();
      if (!stack.empty()) stack.back().feasible |= feasible;
    }
  }

  st.states = done.size();
  st.feasible = done.at(initial_state(n));
  return st;
}

bool split_only_feasible(std::int64_t n, std::size_t state_cap) {
  return split_only_explore(n, state_cap).feasible;
}

std::set<std::int64_t> greedy_length_census(std::int64_t n, int trials,
                                            std::uint64_t seed) {
  std::set<std::int64_t> lengths;
  for (int t = 0; t < trials; ++t) {
    const Strategy st{StrategyKind::GreedyLongestSeeded,
                      splitmix64(seed + static_cast<std::uint64_t>(t))};
    lengths.insert(simulate(initial_state(n), st).length);
  }
  return lengths;
}

}  // namespace zeck
