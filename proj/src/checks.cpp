#include "zeck/checks.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeck/bounds.hpp"
#include "zeck/prng.hpp"
#include "zeck/strategies.hpp"
#include "zeck/sweep.hpp"
#include "zeck/trace_io.hpp"

namespace zeck::checks {

namespace {

using Fail = std::optional<std::pair<std::int64_t, std::string>>;

int team_size(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

// Runs fn(n) for n in [lo, hi], fanning out across an OpenMP team.  fn
// returns a default-constructed T on success; it must keep exceptions to
// itself except StateCapExceeded, which aborts the sweep after the join.
template <class T, class Fn>
std::vector<T> sweep_rows(std::int64_t lo, std::int64_t hi, const Limits& L,
                          Fn fn) {
  if (hi < lo) return {};
  const std::int64_t count = hi - lo + 1;
  std::vector<T> rows(static_cast<std::size_t>(count));
  std::vector<char> cap(static_cast<std::size_t>(count), 0);
  std::vector<std::size_t> cap_visited(static_cast<std::size_t>(count), 0);
  const int team = team_size(L.threads);
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto slot = static_cast<std::size_t>(k);
    try {
      rows[slot] = fn(lo + k);
    } catch (const StateCapExceeded& e) {
      cap[slot] = 1;
      cap_visited[slot] = e.visited();
    }
  }
  for (std::size_t k = 0; k < cap.size(); ++k)
    if (cap[k]) throw StateCapExceeded(cap_visited[k], L.state_cap);
  return rows;
}

// Common case: one message per n, empty meaning pass.
template <class Fn>
std::vector<std::string> sweep(std::int64_t lo, std::int64_t hi,
                               const Limits& L, Fn fn) {
  return sweep_rows<std::string>(lo, hi, L, [&](std::int64_t n) {
    try {
      return fn(n);
    } catch (const StateCapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  });
}

Fail first_fail(const std::vector<std::string>& msgs, std::int64_t lo) {
  for (std::size_t k = 0; k < msgs.size(); ++k)
    if (!msgs[k].empty())
      return {{lo + static_cast<std::int64_t>(k), msgs[k]}};
  return std::nullopt;
}

template <class T>
Fail field_fail(const std::vector<T>& rows, std::string T::*field,
                std::int64_t lo) {
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (!(rows[k].*field).empty())
      return {{lo + static_cast<std::int64_t>(k), rows[k].*field}};
  return std::nullopt;
}

Fail merge(const Fail& a, const Fail& b) {
  if (!a) return b;
  if (!b) return a;
  return a->first <= b->first ? a : b;
}

CheckResult result(std::string name, const Fail& f, std::string note) {
  if (!f) return {std::move(name), true, std::move(note)};
  return {std::move(name), false,
          "counterexample n=" + std::to_string(f->first) + ": " + f->second};
}

std::string span(std::int64_t lo, std::int64_t hi) {
  return "n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// ---- fibzeck and bounds sweeps -------------------------------------------

std::string check_profile(std::int64_t n) {
  const ZeckendorfProfile p = zeckendorf(n);
  if (p.n != n) return "profile stores wrong n";
  if (static_cast<int>(p.deltas.size()) != p.i_max + 1 || p.deltas[0] != 0)
    return "deltas not shaped [0, i_max]";
  if (p.deltas[p.i_max] != 1) return "top index empty";
  std::int64_t sum = 0, z = 0, iz = 0;
  for (int i = 1; i <= p.i_max; ++i) {
    if (p.deltas[i] != 0 && p.deltas[i] != 1) return "summand count not 0/1";
    if (i > 1 && p.deltas[i] == 1 && p.deltas[i - 1] == 1)
      return "adjacent summands at " + std::to_string(i);
    if (p.deltas[i]) {
      sum += fib(i);
      z += 1;
      iz += i;
    }
  }
  if (sum != n) return "summands total " + std::to_string(sum);
  if (z != p.z || iz != p.iz) return "z or iz field inconsistent";
  return "";
}

std::string check_window(std::int64_t n) {
  const ZeckendorfProfile p = zeckendorf(n);
  if (fib(p.i_max) > n) return "F_{i_max} > n";
  if (p.i_max < kMaxFibIndex && fib(p.i_max + 1) <= n) return "F_{i_max+1} <= n";
  return "";
}

std::string check_summary(std::int64_t n) {
  const ZeckendorfProfile p = zeckendorf(n);
  if (p.z > p.i_max) return "Z exceeds i_max";
  if (p.iz > static_cast<std::int64_t>(p.i_max) * (p.i_max + 1) / 2)
    return "IZ exceeds i_max(i_max+1)/2";
  return "";
}

std::string check_bounds_order(std::int64_t n) {
  const BoundsReport r = bounds_report(zeckendorf(n));
  if (r.lower > r.sharp) return "lower bound exceeds sharp upper bound";
  if (r.closed < QuadExact::from_int(r.sharp))
    return "sharp upper bound exceeds closed form";
  return "";
}

// ---- per-trace identity sweep --------------------------------------------

struct TraceMsgs {
  std::string termination;
  std::string conservation;
  std::string ceiling;
  std::string tally_match;
  std::string accounting;
  std::string identity;
};

void inspect_trace(TraceMsgs& out, const Trace& tr,
                   const ZeckendorfProfile& prof, const std::string& label) {
  GameState cur = tr.start;
  for (std::size_t k = 0; k < tr.moves.size(); ++k) {
    cur = apply_move(cur, tr.moves[k]);
    if (out.conservation.empty()) {
      std::int64_t sum = 0;
      for (int i = 1; i <= cur.top_index(); ++i)
        sum += cur.counts[i] * fib(i);
      if (cur.value != prof.n || sum != prof.n)
        out.conservation =
            label + ": value drifted at step " + std::to_string(k + 1);
    }
    if (out.ceiling.empty() && cur.top_index() > prof.i_max)
      out.ceiling = label + ": board index " +
                    std::to_string(cur.top_index()) + " above i_max";
  }
  if (out.termination.empty() && !is_terminal(cur))
    out.termination = label + ": trace does not end in a terminal state";
  if (out.tally_match.empty() && tally(tr) != tr.tallies)
    out.tally_match = label + ": stored tallies differ from replay";
  if (out.ceiling.empty()) {
    for (const auto& [i, c] : tr.tallies.mc)
      if (i >= prof.i_max && c != 0) {
        out.ceiling = label + ": combine tally at index " + std::to_string(i);
        break;
      }
    for (const auto& [i, c] : tr.tallies.ms)
      if (i >= prof.i_max && c != 0) {
        out.ceiling = label + ": split tally at index " + std::to_string(i);
        break;
      }
  }
  if (out.accounting.empty() && !check_accounting(tr.tallies, prof).all_zero())
    out.accounting = label + ": nonzero accounting residual";
  if (out.identity.empty() && exact_length_identity(tr.tallies, prof) != 0)
    out.identity = label + ": nonzero length-identity residual";
}

TraceMsgs check_traces_for(std::int64_t n, const Limits& L) {
  TraceMsgs out;
  const ZeckendorfProfile prof = zeckendorf(n);
  const Strategy kinds[] = {
      {StrategyKind::CombineLargest, 0},
      {StrategyKind::SplitLargest, 0},
      {StrategyKind::SplitSmallest, 0},
      {StrategyKind::GreedyLongest, 0},
      {StrategyKind::GreedyLongestSeeded,
       splitmix64(L.seed + static_cast<std::uint64_t>(n))},
  };
  for (const Strategy& st : kinds) {
    const std::string label(strategy_name(st.kind));
    Trace tr;
    try {
      tr = simulate(initial_state(n), st);
    } catch (const std::exception& e) {
      if (out.termination.empty())
        out.termination = label + ": " + e.what();
      continue;
    }
    inspect_trace(out, tr, prof, label);
  }
  return out;
}

std::string check_random_paths(std::int64_t n, const Limits& L) {
  const ZeckendorfProfile prof = zeckendorf(n);
  std::mt19937_64 rng(splitmix64(L.seed ^ (0xb5ad4eceda1ce2a9ULL +
                                           static_cast<std::uint64_t>(n))));
  for (int p = 0; p < L.random_paths_per_n; ++p) {
    Trace tr;
    tr.start = initial_state(n);
    GameState cur = tr.start;
    while (!is_terminal(cur)) {
      const std::vector<Move> mv = legal_moves(cur);
      const Move m = mv[uniform_below(rng, mv.size())];
      cur = apply_move(cur, m);
      tr.moves.push_back(m);
      count_move(tr.tallies, m);
    }
    tr.length = static_cast<std::int64_t>(tr.moves.size());
    if (!check_accounting(tr.tallies, prof).all_zero())
      return "random path " + std::to_string(p) + ": accounting residual";
    if (exact_length_identity(tr.tallies, prof) != 0)
      return "random path " + std::to_string(p) + ": length-identity residual";
  }
  return "";
}

// ---- strategy length sweeps ----------------------------------------------

std::string check_shortest(std::int64_t n) {
  const ZeckendorfProfile prof = zeckendorf(n);
  const std::int64_t want = prof.n - prof.z;
  const std::int64_t cl =
      simulate(initial_state(n), {StrategyKind::CombineLargest}).length;
  if (cl != want)
    return "combine-largest plays " + std::to_string(cl) + " moves, want " +
           std::to_string(want);
  const std::int64_t sl =
      simulate(initial_state(n), {StrategyKind::SplitLargest}).length;
  if (sl != want)
    return "split-largest plays " + std::to_string(sl) + " moves, want " +
           std::to_string(want);
  return "";
}

// ---- full game-DAG sweep --------------------------------------------------

struct SolverRow {
  std::string error;
  std::string oracle;
  std::string terminal_eq;
  std::string conservation;
  std::string ceiling;
  std::string locus;
  std::string winner;
  bool equality = false;  // longest realized the sharp upper bound
};

SolverRow solver_check(std::int64_t n, const Limits& L) {
  SolverRow d;
  try {
    const ZeckendorfProfile prof = zeckendorf(n);
    const GameGraphStats st = explore(n, L.state_cap);
    const std::int64_t ss =
        simulate(initial_state(n), {StrategyKind::SplitSmallest}).length;
    const std::int64_t gr =
        simulate(initial_state(n), {StrategyKind::GreedyLongest}).length;
    if (st.shortest != prof.n - prof.z)
      d.oracle = "explore shortest " + std::to_string(st.shortest) +
                 " != n - Z = " + std::to_string(prof.n - prof.z);
    else if (ss != st.longest)
      d.oracle = "split-smallest length " + std::to_string(ss) +
                 " != explore longest " + std::to_string(st.longest);
    else if (gr != st.longest)
      d.oracle = "greedy length " + std::to_string(gr) +
                 " != explore longest " + std::to_string(st.longest);

    const std::int64_t sharp = sharp_upper(prof);
    const bool fibm1 = fib_minus_one_index(n).has_value();
    d.equality = st.longest == sharp;
    if (st.longest > sharp)
      d.locus = "longest " + std::to_string(st.longest) +
                " exceeds sharp bound " + std::to_string(sharp);
    else if (d.equality != fibm1)
      d.locus = std::string("bound ") + (d.equality ? "met" : "not met") +
                " although n + 1 is " + (fibm1 ? "" : "not ") + "Fibonacci";

    if (n == 2 && st.winner != Winner::Player1)
      d.winner = "winner is " + std::string(to_string(st.winner)) +
                 ", the two-move game belongs to Player1";
    if (n >= 3 && n <= L.winner_max_n && st.winner != Winner::Player2)
      d.winner = "winner is " + std::string(to_string(st.winner));

    for (const GameState& s : reachable_states(n, L.state_cap)) {
      if (d.terminal_eq.empty()) {
        const bool t = is_terminal(s);
        const bool empty = legal_moves(s).empty();
        const bool zmatch = s.counts == zeckendorf(s.value).deltas;
        if (t != empty || t != zmatch)
          d.terminal_eq = "terminal tests disagree at " + to_wedge(s);
      }
      if (d.conservation.empty()) {
        std::int64_t sum = 0;
        for (int i = 1; i <= s.top_index(); ++i) sum += s.counts[i] * fib(i);
        if (s.value != n || sum != n)
          d.conservation = "reachable state " + to_wedge(s) +
                           " carries value " + std::to_string(sum);
      }
      if (d.ceiling.empty() && s.top_index() > prof.i_max)
        d.ceiling = "reachable state tops out at index " +
                    std::to_string(s.top_index());
    }
  } catch (const StateCapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    d.error = e.what();
  }
  return d;
}

// ---- splitting-class-only sweep -------------------------------------------

struct SplitRow {
  std::string error;
  std::string charac;
  std::string gap;
};

SplitRow split_check(std::int64_t n, const Limits& L) {
  SplitRow r;
  try {
    const SplitOnlyStats st = split_only_explore(n, L.state_cap);
    const bool fibm1 = fib_minus_one_index(n).has_value();
    if (st.feasible != fibm1)
      r.charac = std::string("split-only play is ") +
                 (st.feasible ? "feasible" : "infeasible") +
                 " although n + 1 is " + (fibm1 ? "" : "not ") + "Fibonacci";
    if (st.max_gap > 3)
      r.gap = "summand gap " + std::to_string(st.max_gap) +
              " in a split-only reachable state";
  } catch (const StateCapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

Fail pair_lemma_fail(const Limits& L) {
  for (int k = 2; k <= L.pair_lemma_max_k; ++k) {
    const std::int64_t n = fib(k) - 1;
    if (n < 1) continue;
    const SplitOnlyStats st = split_only_explore(n, L.state_cap);
    if (st.dead_ends != 0)
      return {{n, std::to_string(st.dead_ends) +
                      " split-only dead ends although n + 1 is Fibonacci"}};
  }
  return std::nullopt;
}

std::string check_census(std::int64_t n, const Limits& L) {
  const std::set<std::int64_t> lengths =
      greedy_length_census(n, L.greedy_trials, L.seed);
  if (lengths.size() == 1) return "";
  std::ostringstream os;
  os << lengths.size() << " distinct seeded-greedy lengths:";
  for (std::int64_t v : lengths) os << ' ' << v;
  return os.str();
}

// ---- structural and serialization checks ----------------------------------

Fail inverse_fail(int lo, int hi) {
  for (int im = lo; im <= hi; ++im) {
    const InverseClaimsReport rep = verify_inverse_claims(im);
    if (rep.all_pass()) continue;
    std::ostringstream os;
    if (!rep.first_row.pass)
      os << "first-row claim: cell (1," << rep.first_row.col << ") is "
         << rep.first_row.got << ", want " << rep.first_row.expected;
    else if (!rep.shift.pass)
      os << "shift claim: cell (" << rep.shift.row << "," << rep.shift.col
         << ") is " << rep.shift.got << ", want " << rep.shift.expected;
    else
      os << "column-sum claim: entry " << rep.column_sums.col << " is "
         << rep.column_sums.got << ", want " << rep.column_sums.expected;
    return {{im, os.str()}};
  }
  return std::nullopt;
}

Fail binet_fail() {
  for (int j = 1; j <= 60; ++j) {
    const QuadExact rhs{3 * fib(j) - 2 * j - 1, fib(j) - 1};
    if (rhs < QuadExact::from_int(coeff_a(j)))
      return {{j, "coeff_a(" + std::to_string(j) +
                      ") exceeds its closed-form ceiling"}};
  }
  return std::nullopt;
}

Fail roundtrip_fail(const Limits& L) {
  const std::int64_t ns[] = {1, 2, 4, 7, 12, 33, 64, 100};
  const StrategyKind kinds[] = {
      StrategyKind::CombineLargest, StrategyKind::SplitLargest,
      StrategyKind::SplitSmallest, StrategyKind::GreedyLongest,
      StrategyKind::GreedyLongestSeeded};
  for (std::int64_t n : ns) {
    for (StrategyKind k : kinds) {
      const std::uint64_t seed =
          k == StrategyKind::GreedyLongestSeeded
              ? splitmix64(L.seed + static_cast<std::uint64_t>(n))
              : 0;
      const Trace tr = simulate(initial_state(n), {k, seed});
      std::stringstream buf;
      write_trace(buf, tr, {std::string(strategy_name(k)), seed});
      ReadTrace rt;
      try {
        rt = read_trace(buf);
      } catch (const std::exception& e) {
        return {{n, std::string(strategy_name(k)) + ": " + e.what()}};
      }
      if (rt.trace.moves != tr.moves || rt.trace.tallies != tr.tallies ||
          rt.trace.length != tr.length ||
          rt.meta.strategy != strategy_name(k) || rt.meta.seed != seed)
        return {{n, std::string(strategy_name(k)) +
                        ": round-trip altered the trace"}};
    }
  }
  return std::nullopt;
}

Fail table_fail(const Limits& L) {
  SweepOptions opt;
  opt.solver_max_n = std::min<std::int64_t>(20, L.solver_max_n);
  opt.state_cap = L.state_cap;
  opt.threads = L.threads;
  const std::int64_t hi = std::min<std::int64_t>(120, L.acct_max_n);
  const auto parallel = compute_rows(1, hi, opt);
  const auto serial = compute_rows_serial(1, hi, opt);
  for (std::size_t k = 0; k < parallel.size(); ++k)
    if (!(parallel[k] == serial[k]))
      return {{static_cast<std::int64_t>(k) + 1,
               "parallel row differs from the serial reference"}};
  if (table_csv(parallel) != table_csv(serial))
    return {{hi, "csv bytes differ between parallel and serial runs"}};
  if (table_csv(compute_rows(1, hi, opt)) != table_csv(parallel))
    return {{hi, "csv bytes differ between repeated runs"}};
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verify(const Limits& L) {
  std::vector<CheckResult> out;

  const Fail profile_f = first_fail(sweep(1, L.zeck_max_n, L, check_profile), 1);
  const Fail window_f = first_fail(sweep(1, L.zeck_max_n, L, check_window), 1);
  const Fail summary_f = first_fail(sweep(1, L.zeck_max_n, L, check_summary), 1);
  const Fail order_f =
      first_fail(sweep(2, L.zeck_max_n, L, check_bounds_order), 2);

  const auto traces = sweep_rows<TraceMsgs>(
      2, L.acct_max_n, L, [&](std::int64_t n) {
        try {
          return check_traces_for(n, L);
        } catch (const StateCapExceeded&) {
          throw;
        } catch (const std::exception& e) {
          TraceMsgs t;
          t.termination = std::string("exception: ") + e.what();
          return t;
        }
      });
  const Fail tr_term = field_fail(traces, &TraceMsgs::termination, 2);
  const Fail tr_cons = field_fail(traces, &TraceMsgs::conservation, 2);
  const Fail tr_ceil = field_fail(traces, &TraceMsgs::ceiling, 2);
  const Fail tr_tally = field_fail(traces, &TraceMsgs::tally_match, 2);
  const Fail tr_acct = field_fail(traces, &TraceMsgs::accounting, 2);
  const Fail tr_ident = field_fail(traces, &TraceMsgs::identity, 2);

  const Fail shortest_f = first_fail(sweep(2, L.sim_max_n, L, check_shortest), 2);

  const auto drows = sweep_rows<SolverRow>(
      2, L.solver_max_n, L,
      [&](std::int64_t n) { return solver_check(n, L); });
  const Fail d_err = field_fail(drows, &SolverRow::error, 2);
  const Fail d_oracle = field_fail(drows, &SolverRow::oracle, 2);
  const Fail d_term = field_fail(drows, &SolverRow::terminal_eq, 2);
  const Fail d_cons = field_fail(drows, &SolverRow::conservation, 2);
  const Fail d_ceil = field_fail(drows, &SolverRow::ceiling, 2);
  const Fail d_locus = field_fail(drows, &SolverRow::locus, 2);
  const Fail d_winner = field_fail(drows, &SolverRow::winner, 2);

  const Fail census_f = first_fail(
      sweep(2, L.greedy_max_n, L,
            [&](std::int64_t n) { return check_census(n, L); }),
      2);

  const auto srows = sweep_rows<SplitRow>(
      2, L.split_only_max_n, L,
      [&](std::int64_t n) { return split_check(n, L); });
  const Fail s_err = field_fail(srows, &SplitRow::error, 2);
  const Fail s_charac = field_fail(srows, &SplitRow::charac, 2);
  const Fail s_gap = field_fail(srows, &SplitRow::gap, 2);
  const Fail pair_f = pair_lemma_fail(L);

  const Fail paths_f = first_fail(
      sweep(2, L.random_path_max_n, L,
            [&](std::int64_t n) { return check_random_paths(n, L); }),
      2);

  const Fail inverse_f = inverse_fail(3, 40);
  const Fail binet_f = binet_fail();
  const Fail rt_f = roundtrip_fail(L);
  const Fail tbl_f = table_fail(L);

  out.push_back(result("fibzeck.decomposition-legal", profile_f,
                       span(1, L.zeck_max_n)));
  out.push_back(result("fibzeck.greedy-window", window_f, span(1, L.zeck_max_n)));
  out.push_back(result("fibzeck.summary-stats", summary_f, span(1, L.zeck_max_n)));
  out.push_back(result("engine.value-conservation", merge(tr_cons, d_cons),
                       span(2, std::max(L.acct_max_n, L.solver_max_n))));
  out.push_back(result("engine.terminal-equivalence", d_term,
                       "all reachable states, " + span(2, L.solver_max_n)));
  out.push_back(result("engine.index-ceiling", merge(tr_ceil, d_ceil),
                       span(2, std::max(L.acct_max_n, L.solver_max_n))));
  out.push_back(result("engine.termination", merge(tr_term, d_err),
                       "traces " + span(2, L.acct_max_n) + ", full DAG " +
                           span(2, L.solver_max_n)));
  out.push_back(result("engine.accounting-residuals", tr_acct,
                       "five strategies, " + span(2, L.acct_max_n)));
  out.push_back(result("strategies.shortest-realized", shortest_f,
                       "combine-largest and split-largest, " +
                           span(2, L.sim_max_n)));
  out.push_back(result("strategies.longest-realized", d_oracle,
                       span(2, L.solver_max_n)));
  out.push_back(result(
      "strategies.greedy-length-unique", census_f,
      std::to_string(L.greedy_trials) + " seeds, " + span(2, L.greedy_max_n)));
  out.push_back(result("strategies.trace-accounting", merge(tr_tally, tr_acct),
                       "five strategies, " + span(2, L.acct_max_n)));
  out.push_back(result("bounds.order", order_f, span(2, L.zeck_max_n)));
  out.push_back(result("bounds.sharpness-locus", d_locus, span(2, L.solver_max_n)));
  out.push_back(result("bounds.exact-length-identity", merge(tr_ident, paths_f),
                       "strategy traces " + span(2, L.acct_max_n) +
                           " and random paths " + span(2, L.random_path_max_n)));
  out.push_back(result("bounds.inverse-claims", inverse_f, "i_max in [3, 40]"));
  out.push_back(result("bounds.binet-margin", binet_f, "indices 1..60"));
  out.push_back(result("solver.oracle-agreement", merge(d_oracle, d_err),
                       span(2, L.solver_max_n)));
  out.push_back(result("solver.split-only-characterization",
                       merge(s_charac, s_err), span(2, L.split_only_max_n)));
  out.push_back(result("solver.split-only-gap", s_gap, span(2, L.split_only_max_n)));
  out.push_back(result("solver.split-only-pair-availability", pair_f,
                       "n = F_k - 1, k in [2, " +
                           std::to_string(L.pair_lemma_max_k) + "]"));
  out.push_back(result("solver.winner-parity", d_winner,
                       span(3, L.winner_max_n) + " plus the n=2 exception"));
  out.push_back(result("trace.round-trip", rt_f,
                       "five strategies over sample sizes up to 100"));
  out.push_back(result("table.determinism", tbl_f,
                       "parallel rows equal the serial reference"));
  return out;
}

std::vector<CheckResult> run_acceptance(const Limits& L) {
  std::vector<CheckResult> out;

  const auto drows = sweep_rows<SolverRow>(
      2, L.solver_max_n, L,
      [&](std::int64_t n) { return solver_check(n, L); });

  // 1: shortest game length, exhaustively and by the combine-first pair.
  {
    Fail f = field_fail(drows, &SolverRow::error, 2);
    for (std::size_t k = 0; k < drows.size() && !f; ++k)
      if (!drows[k].oracle.empty() &&
          drows[k].oracle.find("shortest") != std::string::npos)
        f = {{2 + static_cast<std::int64_t>(k), drows[k].oracle}};
    f = merge(f, first_fail(sweep(2, L.sim_max_n, L, check_shortest), 2));
    out.push_back(result("shortest-game-length", f,
                         "explore " + span(2, L.solver_max_n) +
                             "; strategies " + span(2, L.sim_max_n)));
  }

  // 2: longest game length realized by split-smallest and greedy.
  {
    Fail f = field_fail(drows, &SolverRow::error, 2);
    f = merge(f, field_fail(drows, &SolverRow::oracle, 2));
    out.push_back(result("longest-game-length", f, span(2, L.solver_max_n)));
  }

  // 3: seeded greedy always plays games of one single length.
  {
    const Fail f = first_fail(
        sweep(2, L.greedy_max_n, L,
              [&](std::int64_t n) { return check_census(n, L); }),
        2);
    out.push_back(result("greedy-length-uniqueness", f,
                         std::to_string(L.greedy_trials) + " seeds, " +
                             span(2, L.greedy_max_n)));
  }

  // 4: longest <= sharp bound, met exactly when n + 1 is Fibonacci.
  {
    Fail f = merge(field_fail(drows, &SolverRow::error, 2),
                   field_fail(drows, &SolverRow::locus, 2));
    std::set<std::int64_t> got, want;
    for (std::size_t k = 0; k < drows.size(); ++k)
      if (drows[k].equality) got.insert(2 + static_cast<std::int64_t>(k));
    for (std::int64_t n = 2; n <= L.solver_max_n; ++n)
      if (fib_minus_one_index(n)) want.insert(n);
    std::ostringstream note;
    note << "equality at {";
    bool first = true;
    for (std::int64_t n : want) {
      note << (first ? "" : ", ") << n;
      first = false;
    }
    note << "}, " << span(2, L.solver_max_n);
    if (!f && got != want) {
      std::ostringstream os;
      os << "equality set {";
      first = true;
      for (std::int64_t n : got) {
        os << (first ? "" : ", ") << n;
        first = false;
      }
      os << "} differs";
      f = {{got.empty() ? 2 : *got.begin(), os.str()}};
    }
    out.push_back(result("sharp-upper-bound-locus", f, note.str()));
  }

  // 5 and 6: split-only play feasibility and the gap bound.
  {
    const auto srows = sweep_rows<SplitRow>(
        2, L.split_only_max_n, L,
        [&](std::int64_t n) { return split_check(n, L); });
    const Fail err = field_fail(srows, &SplitRow::error, 2);
    out.push_back(result("split-only-characterization",
                         merge(err, field_fail(srows, &SplitRow::charac, 2)),
                         span(2, L.split_only_max_n)));
    out.push_back(result("split-only-gap-bound",
                         merge(err, field_fail(srows, &SplitRow::gap, 2)),
                         "every split-only reachable state, " +
                             span(2, L.split_only_max_n)));
  }

  // 7: accounting and exact-length identities on every trace.
  {
    const auto traces = sweep_rows<TraceMsgs>(
        2, L.acct_max_n, L, [&](std::int64_t n) {
          try {
            return check_traces_for(n, L);
          } catch (const StateCapExceeded&) {
            throw;
          } catch (const std::exception& e) {
            TraceMsgs t;
            t.termination = std::string("exception: ") + e.what();
            return t;
          }
        });
    Fail f;
    for (auto field :
         {&TraceMsgs::termination, &TraceMsgs::conservation,
          &TraceMsgs::ceiling, &TraceMsgs::tally_match, &TraceMsgs::accounting,
          &TraceMsgs::identity})
      f = merge(f, field_fail(traces, field, 2));
    f = merge(f, first_fail(sweep(2, L.random_path_max_n, L,
                                  [&](std::int64_t n) {
                                    return check_random_paths(n, L);
                                  }),
                            2));
    out.push_back(result("trace-identities", f,
                         "five strategies " + span(2, L.acct_max_n) + "; " +
                             std::to_string(L.random_paths_per_n) +
                             " random paths " + span(2, L.random_path_max_n)));
  }

  // 8: structural claims about the inverse of the accounting system.
  out.push_back(
      result("inverse-structure-claims", inverse_fail(3, 40), "i_max in [3, 40]"));

  // 9: lower <= sharp <= closed, exactly.
  out.push_back(result("bound-ordering",
                       first_fail(sweep(2, L.zeck_max_n, L, check_bounds_order), 2),
                       span(2, L.zeck_max_n)));

  // 10: the second player wins every game with 3 <= n <= 25.
  {
    Fail f = merge(field_fail(drows, &SolverRow::error, 2),
                   field_fail(drows, &SolverRow::winner, 2));
    out.push_back(result("winner-parity", f,
                         "Player2 for " + span(3, L.winner_max_n) +
                             "; n=2 is Player1's game (single forced move)"));
  }

  // 11: split-smallest on n = F_25 - 1 runs about phi^2 times n moves.
  {
    const std::int64_t n = fib(25) - 1;
    const std::int64_t len =
        simulate(initial_state(n), {StrategyKind::SplitSmallest}).length;
    const double ratio =
        static_cast<double>(len) / static_cast<double>(n);
    std::ostringstream os;
    os << "n=" << n << ", length=" << len << ", ratio=" << ratio;
    const bool pass = ratio >= 2.56 && ratio <= 2.62;
    out.push_back({"large-split-smallest-ratio", pass,
                   pass ? os.str() + " within [2.56, 2.62]"
                        : os.str() + " outside [2.56, 2.62]"});
  }

  return out;
}

}  // namespace zeck::checks
