#include "zeck/engine.hpp"

#include <sstream>
#include <stdexcept>

#include "zeck/prng.hpp"

namespace zeck {

Move combine1() { return {MoveKind::Combine1, 1}; }

Move combine_at(int i) {
  if (i < 2) throw std::invalid_argument("combine_at: index must be >= 2");
  return {MoveKind::Combine, i};
}

Move split_at(int i) {
  if (i < 2) throw std::invalid_argument("split_at: index must be >= 2");
  return {MoveKind::Split, i};
}

bool is_splitting_class(const Move& m) { return m.kind != MoveKind::Combine; }

std::string to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::Combine1: return "C1";
    case MoveKind::Combine: return "C" + std::to_string(m.index);
    case MoveKind::Split: return "S" + std::to_string(m.index);
  }
  return "?";
}

std::string move_rewrite(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::Combine1:
      os << "{1 ∧ 1 → 2}";
      break;
    case MoveKind::Combine:
      os << "{" << fib(m.index - 1) << " ∧ " << fib(m.index) << " → "
         << fib(m.index + 1) << "}";
      break;
    case MoveKind::Split:
      if (m.index == 2)
        os << "{2 ∧ 2 → 1 ∧ 3}";
      else
        os << "{" << fib(m.index) << " ∧ " << fib(m.index) << " → "
           << fib(m.index - 2) << " ∧ " << fib(m.index + 1) << "}";
      break;
  }
  return os.str();
}

std::size_t StateHash::operator()(const GameState& s) const {
  std::uint64_t h = 0x243f6a8885a308d3ULL ^ s.counts.size();
  for (std::size_t i = 1; i < s.counts.size(); ++i)
    h = splitmix64(h ^ (static_cast<std::uint64_t>(s.counts[i]) +
                        0x9e3779b97f4a7c15ULL * i));
  return static_cast<std::size_t>(h);
}

namespace {

void trim(GameState& s) {
  while (s.counts.size() > 1 && s.counts.back() == 0) s.counts.pop_back();
}

}  // namespace

GameState initial_state(std::int64_t n) {
  if (n < 1) throw std::domain_error("initial_state: n must be >= 1");
  GameState s;
  s.counts = {0, n};
  s.value = n;
  return s;
}

GameState state_from_counts(const std::vector<std::int64_t>& counts_from_1) {
  GameState s;
  s.counts.assign(counts_from_1.size() + 1, 0);
  std::int64_t value = 0;
  for (std::size_t k = 0; k < counts_from_1.size(); ++k) {
    const std::int64_t c = counts_from_1[k];
    if (c < 0)
      throw std::invalid_argument("state_from_counts: negative count at index " +
                                  std::to_string(k + 1));
    s.counts[k + 1] = c;
    if (c > 0)
      value = checked_add(value,
                          checked_mul(c, fib(static_cast<int>(k) + 1)));
  }
  if (value < 1)
    throw std::invalid_argument("state_from_counts: empty board");
  s.value = value;
  trim(s);
  return s;
}

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> out;
  const int top = s.top_index();
  for (int i = 2; i <= top; ++i)
    if (s.counts[i] >= 2) out.push_back(split_at(i));
  if (s.count_at(1) >= 2) out.push_back(combine1());
  for (int i = 2; i <= top; ++i)
    if (s.counts[i - 1] >= 1 && s.counts[i] >= 1) out.push_back(combine_at(i));
  return out;
}

namespace {

[[noreturn]] void illegal(const Move& m, int index, std::int64_t have,
                          std::int64_t need) {
  throw std::invalid_argument("illegal move " + to_string(m) + ": counts[" +
                              std::to_string(index) + "] is " +
                              std::to_string(have) + ", need >= " +
                              std::to_string(need));
}

}  // namespace

GameState apply_move(const GameState& s, const Move& m) {
  GameState r = s;
  auto need = [&](int i, std::int64_t k) {
    if (r.count_at(i) < k) illegal(m, i, r.count_at(i), k);
  };
  auto bump = [&](int i, std::int64_t d) {
    if (i >= static_cast<int>(r.counts.size()))
      r.counts.resize(static_cast<std::size_t>(i) + 1, 0);
    r.counts[i] += d;
  };
  switch (m.kind) {
    case MoveKind::Combine1:
      need(1, 2);
      bump(1, -2);
      bump(2, +1);
      break;
    case MoveKind::Combine:
      if (m.index < 2) throw std::invalid_argument("apply_move: bad index");
      need(m.index - 1, 1);
      need(m.index, 1);
      bump(m.index - 1, -1);
      bump(m.index, -1);
      bump(m.index + 1, +1);
      break;
    case MoveKind::Split:
      if (m.index < 2) throw std::invalid_argument("apply_move: bad index");
      need(m.index, 2);
      bump(m.index, -2);
      if (m.index == 2) {
        bump(1, +1);
        bump(3, +1);
      } else {
        bump(m.index - 2, +1);
        bump(m.index + 1, +1);
      }
      break;
  }
  trim(r);
  return r;
}

bool is_terminal(const GameState& s) {
  const int top = s.top_index();
  for (int i = 1; i <= top; ++i) {
    if (s.counts[i] >= 2) return false;
    if (i < top && s.counts[i] >= 1 && s.counts[i + 1] >= 1) return false;
  }
  return true;
}

std::string to_wedge(const GameState& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 1; i <= s.top_index(); ++i) {
    if (s.counts[i] == 0) continue;
    if (!first) os << " ∧ ";
    first = false;
    os << fib(i);
    if (s.counts[i] > 1) os << "^" << s.counts[i];
  }
  os << "}";
  return os.str();
}

std::int64_t MoveTally::mc_at(int i) const {
  auto it = mc.find(i);
  return it == mc.end() ? 0 : it->second;
}

std::int64_t MoveTally::ms_at(int i) const {
  auto it = ms.find(i);
  return it == ms.end() ? 0 : it->second;
}

std::int64_t MoveTally::total() const {
  std::int64_t t = 0;
  for (const auto& [i, c] : mc) t += c;
  for (const auto& [i, c] : ms) t += c;
  return t;
}

void count_move(MoveTally& t, const Move& m) {
  if (m.kind == MoveKind::Split)
    t.ms[m.index] += 1;
  else
    t.mc[m.kind == MoveKind::Combine1 ? 1 : m.index] += 1;
}

MoveTally tally(const Trace& t) {
  MoveTally out;
  GameState cur = t.start;
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    const Move& m = t.moves[k];
    try {
      cur = apply_move(cur, m);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("trace replay failed at step " +
                               std::to_string(k + 1) + ": " + e.what());
    }
    count_move(out, m);
  }
  return out;
}

bool AccountingReport::all_zero() const {
  for (const auto& [i, r] : residuals)
    if (r != 0) return false;
  return true;
}

AccountingReport check_accounting(const MoveTally& t, const GameState& start,
                                  const GameState& final_state) {
  if (start.value != final_state.value)
    throw std::invalid_argument(
        "check_accounting: start and final values differ");
  const int im = i_max_of(start.value);
  // Tallies at index >= i_max read as zero: a board of this value can never
  // host a move there, so the clamp only erases impossible entries.
  auto ms_star = [&](int j) -> std::int64_t {
    if (j == 1) return t.mc_at(1);  // Combine1 acts as the index-1 split
    if (j < 2 || j >= im) return 0;
    return t.ms_at(j);
  };
  auto mc_star = [&](int j) -> std::int64_t {
    if (j < 2 || j >= im) return 0;
    return t.mc_at(j);
  };
  auto delta = [&](int i) {
    return final_state.count_at(i) - start.count_at(i);
  };
  AccountingReport rep;
  rep.residuals.emplace_back(
      1, start.count_at(1) - 2 * t.mc_at(1) - mc_star(2) + ms_star(2) +
             ms_star(3) - final_state.count_at(1));
  for (int i = 2; i <= im; ++i)
    rep.residuals.emplace_back(
        i, ms_star(i - 1) - 2 * ms_star(i) + ms_star(i + 2) + mc_star(i - 1) -
               mc_star(i) - mc_star(i + 1) - delta(i));
  return rep;
}

AccountingReport check_accounting(const MoveTally& t,
                                  const ZeckendorfProfile& profile) {
  GameState final_state;
  final_state.counts = profile.deltas;
  final_state.value = profile.n;
  return check_accounting(t, initial_state(profile.n), final_state);
}

}  // namespace zeck
