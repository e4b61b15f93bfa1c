// Command-line driver: simulate, bounds, solve, verify, table, play.
// Exit codes: 0 success, 2 bad arguments, 3 invariant or property failure,
// 4 state-cap exhaustion.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zeck/bounds.hpp"
#include "zeck/checks.hpp"
#include "zeck/engine.hpp"
#include "zeck/fibzeck.hpp"
#include "zeck/solver.hpp"
#include "zeck/strategies.hpp"
#include "zeck/sweep.hpp"
#include "zeck/trace_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadArgs = 2;
constexpr int kInvariant = 3;
constexpr int kStateCap = 4;

std::string closed_display(const zeck::QuadExact& v) {
  if (v.q == 0) return v.exact_string();
  return v.exact_string() + "≈" + v.decimal_string();
}

std::string tally_line(const zeck::MoveTally& t) {
  std::string out = "tallies:";
  if (const auto c1 = t.mc_at(1); c1 > 0) out += " C1=" + std::to_string(c1);
  for (const auto& [i, c] : t.ms)
    if (c > 0) out += " S" + std::to_string(i) + "=" + std::to_string(c);
  for (const auto& [i, c] : t.mc)
    if (i >= 2 && c > 0) out += " C" + std::to_string(i) + "=" + std::to_string(c);
  if (out == "tallies:") out += " none";
  return out;
}

int cmd_simulate(std::int64_t n, const std::string& strategy,
                 std::uint64_t seed, const std::string& trace_out) {
  const auto st = zeck::strategy_from_name(strategy, seed);
  if (!st) {
    std::cerr << "unknown strategy: " << strategy << "\n";
    return kBadArgs;
  }
  const zeck::Trace tr = zeck::simulate(zeck::initial_state(n), *st);
  const zeck::ZeckendorfProfile prof = zeck::zeckendorf(n);
  std::cout << "n=" << n << " strategy=" << strategy;
  if (st->kind == zeck::StrategyKind::GreedyLongestSeeded)
    std::cout << " seed=" << seed;
  std::cout << "\nlength=" << tr.length << "\n"
            << tally_line(tr.tallies) << "\n";
  zeck::GameState final_state = tr.start;
  for (const zeck::Move& m : tr.moves) final_state = zeck::apply_move(final_state, m);
  std::cout << "final: " << zeck::to_wedge(final_state) << "\n";

  if (!zeck::check_accounting(tr.tallies, prof).all_zero()) {
    std::cerr << "invariant violation: nonzero accounting residual\n";
    return kInvariant;
  }
  if (zeck::exact_length_identity(tr.tallies, prof) != 0) {
    std::cerr << "invariant violation: nonzero length-identity residual\n";
    return kInvariant;
  }
  if (!trace_out.empty()) {
    std::ofstream os(trace_out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open " << trace_out << " for writing\n";
      return kBadArgs;
    }
    zeck::write_trace(os, tr, {strategy, seed});
    std::cout << "trace written to " << trace_out << "\n";
  }
  return kOk;
}

int cmd_bounds(std::int64_t n) {
  const zeck::BoundsReport r = zeck::bounds_report(zeck::zeckendorf(n));
  std::cout << "n=" << n << " lower=" << r.lower << " sharp=" << r.sharp
            << " closed=" << closed_display(r.closed) << " prior=" << r.prior
            << "\n";
  return kOk;
}

int cmd_solve(std::int64_t n, std::size_t state_cap) {
  const zeck::GameGraphStats st = zeck::explore(n, state_cap);
  std::cout << "n=" << n << " states=" << st.states << " longest=" << st.longest
            << " shortest=" << st.shortest
            << " winner=" << zeck::to_string(st.winner) << "\n";
  return kOk;
}

int run_suite(const std::vector<zeck::checks::CheckResult>& results,
              const char* label) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (!r.pass) ++failed;
  }
  if (failed > 0) {
    std::cout << label << ": " << failed << " of " << results.size()
              << " checks failed\n";
    return kInvariant;
  }
  std::cout << label << ": all " << results.size() << " checks passed\n";
  return kOk;
}

zeck::checks::Limits scaled_limits(std::int64_t max_n, std::int64_t solver_max_n,
                                   int trials, std::uint64_t seed,
                                   std::size_t state_cap, int threads) {
  zeck::checks::Limits L;
  L.zeck_max_n = std::min(L.zeck_max_n, max_n);
  L.sim_max_n = std::min(L.sim_max_n, max_n);
  L.acct_max_n = std::min(L.acct_max_n, max_n);
  L.greedy_max_n = std::min(L.greedy_max_n, max_n);
  L.random_path_max_n = std::min(L.random_path_max_n, max_n);
  L.split_only_max_n = std::min(L.split_only_max_n, max_n);
  L.solver_max_n = solver_max_n;
  L.winner_max_n = std::min(L.winner_max_n, solver_max_n);
  L.greedy_trials = trials;
  L.seed = seed;
  L.state_cap = state_cap;
  L.threads = threads;
  return L;
}

int cmd_verify(const zeck::checks::Limits& L) {
  return run_suite(zeck::checks::run_verify(L), "verify");
}

int cmd_table(std::int64_t min_n, std::int64_t max_n, const std::string& out,
              const std::string& format, const zeck::SweepOptions& opt) {
  const std::vector<zeck::TableRow> rows = zeck::compute_rows(min_n, max_n, opt);
  const std::string text =
      format == "jsonl" ? zeck::table_jsonl(rows) : zeck::table_csv(rows);
  if (out.empty() || out == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open " << out << " for writing\n";
    return kBadArgs;
  }
  os << text;
  std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  return kOk;
}

int cmd_play(std::int64_t n, const std::string& opponent, bool human_second,
             std::uint64_t seed) {
  const auto opp = zeck::strategy_from_name(opponent, seed);
  if (!opp) {
    std::cerr << "unknown strategy: " << opponent << "\n";
    return kBadArgs;
  }
  std::mt19937_64 rng(seed);
  zeck::GameState cur = zeck::initial_state(n);
  int player = 1;  // the side to move; whoever moves last wins
  const int human_player = human_second ? 2 : 1;
  std::cout << "Zeckendorf game on n=" << n
            << ". Whoever moves last wins. You are Player " << human_player
            << "; the " << opponent << " strategy is Player "
            << (3 - human_player) << ".\n";
  while (!zeck::is_terminal(cur)) {
    const std::vector<zeck::Move> moves = zeck::legal_moves(cur);
    std::cout << "\nstate: " << zeck::to_wedge(cur) << "\n";
    zeck::Move chosen = moves.front();
    if (player == human_player) {
      std::cout << "Player " << player << " (you) to move:\n";
      for (std::size_t k = 0; k < moves.size(); ++k)
        std::cout << "  " << k + 1 << ") " << zeck::to_string(moves[k]) << " "
                  << zeck::move_rewrite(moves[k]) << "\n";
      for (;;) {
        std::cout << "move> " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cout << "\ngame abandoned\n";
          return kOk;
        }
        try {
          const std::size_t sel = std::stoul(line);
          if (sel >= 1 && sel <= moves.size()) {
            chosen = moves[sel - 1];
            break;
          }
        } catch (const std::exception&) {
        }
        std::cout << "enter a number between 1 and " << moves.size() << "\n";
      }
    } else {
      chosen = zeck::next_move(*opp, cur, &rng);
      std::cout << "Player " << player << " (" << opponent << ") plays "
                << zeck::to_string(chosen) << " "
                << zeck::move_rewrite(chosen) << "\n";
    }
    cur = zeck::apply_move(cur, chosen);
    if (zeck::is_terminal(cur)) {
      std::cout << "\nfinal: " << zeck::to_wedge(cur) << "\nPlayer " << player
                << (player == human_player ? " (you)" : " (" + opponent + ")")
                << " moved last and wins.\n";
      return kOk;
    }
    player = 3 - player;
  }
  std::cout << "the board is already fully decomposed, no moves to play\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-player Zeckendorf game: simulation, bounds, exhaustive "
               "solving, verification sweeps, tables, interactive play"};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::string strategy = "greedy";
  std::uint64_t seed = 0;
  std::string trace_out;
  std::size_t state_cap = zeck::kDefaultStateCap;
  int threads = 0;

  auto* sim = app.add_subcommand("simulate", "Play one full game with a strategy");
  sim->add_option("n", n, "number of starting 1's")->required()->check(CLI::PositiveNumber);
  sim->add_option("--strategy", strategy,
                  "combine-largest | split-largest | split-smallest | greedy | greedy-seeded");
  sim->add_option("--seed", seed, "seed for greedy-seeded");
  sim->add_option("--trace-out", trace_out, "write the trace as line-delimited records");

  auto* bnd = app.add_subcommand("bounds", "Print game-length bounds for n");
  bnd->add_option("n", n, "board value")->required()->check(CLI::PositiveNumber);

  auto* slv = app.add_subcommand("solve", "Exhaustively solve the game DAG for n");
  slv->add_option("n", n, "number of starting 1's")->required()->check(CLI::PositiveNumber);
  slv->add_option("--state-cap", state_cap, "abort after this many distinct states");

  std::int64_t verify_max_n = 0;  // 0 keeps each sweep at its committed range
  std::int64_t solver_max_n = 30;
  int trials = 100;
  auto* ver = app.add_subcommand("verify", "Run the full invariant suite");
  ver->add_option("--max-n", verify_max_n, "cap every sweep at this n (default: committed ranges)");
  ver->add_option("--solver-max-n", solver_max_n, "cap exhaustive game-DAG sweeps");
  ver->add_option("--trials", trials, "seeded-greedy trials per n")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "base seed for randomized sweeps");
  ver->add_option("--state-cap", state_cap, "abort after this many distinct states");
  ver->add_option("--threads", threads, "worker threads (0 = all)");

  std::int64_t table_min_n = 1, table_max_n = 30;
  std::string out, format = "csv";
  auto* tab = app.add_subcommand("table", "Emit one row of statistics per n");
  tab->add_option("--min-n", table_min_n, "first n")->check(CLI::PositiveNumber);
  tab->add_option("--max-n", table_max_n, "last n")->required()->check(CLI::PositiveNumber);
  tab->add_option("--out", out, "output path (default stdout)");
  tab->add_option("--format", format, "csv | jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  tab->add_option("--solver-max-n", solver_max_n, "fill brute-force columns up to this n");
  tab->add_option("--state-cap", state_cap, "abort after this many distinct states");
  tab->add_option("--threads", threads, "worker threads (0 = all)");

  std::string opponent = "greedy";
  bool human_first = false, human_second = false;
  auto* ply = app.add_subcommand("play", "Play interactively against a strategy");
  ply->add_option("n", n, "number of starting 1's")->required()->check(CLI::PositiveNumber);
  ply->add_option("--opponent", opponent, "strategy for the machine side");
  ply->add_flag("--human-first", human_first, "you are Player 1 (default)");
  ply->add_flag("--human-second", human_second, "you are Player 2");
  ply->add_option("--seed", seed, "seed for a seeded opponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (sim->parsed()) return cmd_simulate(n, strategy, seed, trace_out);
    if (bnd->parsed()) return cmd_bounds(n);
    if (slv->parsed()) return cmd_solve(n, state_cap);
    if (ver->parsed()) {
      zeck::checks::Limits L = scaled_limits(
          verify_max_n > 0 ? verify_max_n : std::numeric_limits<std::int64_t>::max(),
          solver_max_n, trials, seed, state_cap, threads);
      return cmd_verify(L);
    }
    if (tab->parsed()) {
      if (table_min_n > table_max_n) {
        std::cerr << "--min-n must not exceed --max-n\n";
        return kBadArgs;
      }
      zeck::SweepOptions opt;
      opt.solver_max_n = solver_max_n;
      opt.state_cap = state_cap;
      opt.threads = threads;
      return cmd_table(table_min_n, table_max_n, out, format, opt);
    }
    if (ply->parsed()) {
      if (n < 2) {
        std::cerr << "play needs n >= 2 so at least one move exists\n";
        return kBadArgs;
      }
      if (human_first && human_second) {
        std::cerr << "choose one of --human-first and --human-second\n";
        return kBadArgs;
      }
      return cmd_play(n, opponent, human_second, seed);
    }
  } catch (const zeck::StateCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kStateCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  return kBadArgs;
}
