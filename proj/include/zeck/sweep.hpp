#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeck/bounds.hpp"
#include "zeck/solver.hpp"

namespace zeck {

// One fully-evaluated table line.  The four brute-force fields are only
// meaningful when have_brute is set (n within the exhaustive-search cutoff).
struct TableRow {
  std::int64_t n = 0;
  std::int64_t z = 0;
  std::int64_t iz = 0;
  int i_max = 0;
  std::int64_t lower = 0;
  std::int64_t len_combine_largest = 0;
  std::int64_t len_split_largest = 0;
  std::int64_t len_split_smallest = 0;
  std::int64_t len_greedy = 0;
  bool have_brute = false;
  std::int64_t brute_shortest = 0;
  std::int64_t brute_longest = 0;
  Winner winner = Winner::None;
  bool split_only = false;
  std::int64_t sharp_upper = 0;
  QuadExact closed_upper;
  std::int64_t prior_upper = 0;
  bool is_fib_minus_one = false;

  bool operator==(const TableRow&) const = default;
};

struct SweepOptions {
  std::int64_t solver_max_n = 30;  // brute columns stop past this n
  std::size_t state_cap = kDefaultStateCap;
  int threads = 0;  // 0: library default
};

TableRow table_row(std::int64_t n, const SweepOptions& opt);

// Per-n work fans out across an OpenMP team; each n writes its own slot, so
// the result is identical to the serial reference below.
std::vector<TableRow> compute_rows(std::int64_t lo, std::int64_t hi,
                                   const SweepOptions& opt);

// Serial reference implementation, kept as the comparison baseline for
// tests and the benchmark.
std::vector<TableRow> compute_rows_serial(std::int64_t lo, std::int64_t hi,
                                          const SweepOptions& opt);

std::string csv_header();
std::string to_csv(const TableRow& r);
std::string table_csv(const std::vector<TableRow>& rows);
std::string to_jsonl(const TableRow& r);
std::string table_jsonl(const std::vector<TableRow>& rows);

}  // namespace zeck
