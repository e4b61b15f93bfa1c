#include "zeck/sweep.hpp"

#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeck/strategies.hpp"

namespace zeck {

TableRow table_row(std::int64_t n, const SweepOptions& opt) {
  const ZeckendorfProfile prof = zeckendorf(n);
  TableRow r;
  r.n = n;
  r.z = prof.z;
  r.iz = prof.iz;
  r.i_max = prof.i_max;
  r.lower = length_lower_bound(prof);
  const GameState start = initial_state(n);
  r.len_combine_largest =
      simulate(start, {StrategyKind::CombineLargest}).length;
  r.len_split_largest = simulate(start, {StrategyKind::SplitLargest}).length;
  r.len_split_smallest = simulate(start, {StrategyKind::SplitSmallest}).length;
  r.len_greedy = simulate(start, {StrategyKind::GreedyLongest}).length;
  r.sharp_upper = sharp_upper(prof);
  r.closed_upper = closed_upper(prof);
  r.prior_upper = prior_upper(prof);
  r.is_fib_minus_one = fib_minus_one_index(n).has_value();
  r.have_brute = n <= opt.solver_max_n;
  if (r.have_brute) {
    const GameGraphStats st = explore(n, opt.state_cap);
    r.brute_shortest = st.shortest;
    r.brute_longest = st.longest;
    r.winner = st.winner;
    r.split_only = split_only_explore(n, opt.state_cap).feasible;
  }
  return r;
}

namespace {

struct SlotError {
  bool failed = false;
  bool cap_exceeded = false;
  std::size_t visited = 0;
  std::string message;
};

void rethrow_first(const std::vector<SlotError>& errors,
                   std::size_t cap) {
  for (const SlotError& e : errors) {
    if (!e.failed) continue;
    if (e.cap_exceeded) throw StateCapExceeded(e.visited, cap);
    throw std::runtime_error(e.message);
  }
}

}  // namespace

std::vector<TableRow> compute_rows(std::int64_t lo, std::int64_t hi,
                                   const SweepOptions& opt) {
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("compute_rows: bad range");
  const std::int64_t count = hi - lo + 1;
  std::vector<TableRow> rows(static_cast<std::size_t>(count));
  std::vector<SlotError> errors(static_cast<std::size_t>(count));
#ifdef _OPENMP
  const int team = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#else
  const int team = 1;
  (void)team;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (std::int64_t k = 0; k < count; ++k) {
    // Exceptions must not cross the parallel region; record and rethrow
    // after the join, lowest n first.
    try {
      rows[static_cast<std::size_t>(k)] = table_row(lo + k, opt);
    } catch (const StateCapExceeded& e) {
      errors[static_cast<std::size_t>(k)] = {true, true, e.visited(),
                                             e.what()};
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(k)] = {true, false, 0, e.what()};
    }
  }
  rethrow_first(errors, opt.state_cap);
  return rows;
}

std::vector<TableRow> compute_rows_serial(std::int64_t lo, std::int64_t hi,
                                          const SweepOptions& opt) {
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("compute_rows_serial: bad range");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) rows.push_back(table_row(n, opt));
  return rows;
}

std::string csv_header() {
  return "n,z,iz,i_max,lower,len_combine_largest,len_split_largest,"
         "len_split_smallest,len_greedy,brute_shortest,brute_longest,"
         "sharp_upper,closed_upper_decimal,prior_upper,winner,split_only,"
         "is_fib_minus_one";
}

std::string to_csv(const TableRow& r) {
  std::ostringstream os;
  os << r.n << ',' << r.z << ',' << r.iz << ',' << r.i_max << ',' << r.lower
     << ',' << r.len_combine_largest << ',' << r.len_split_largest << ','
     << r.len_split_smallest << ',' << r.len_greedy << ',';
  if (r.have_brute)
    os << r.brute_shortest << ',' << r.brute_longest;
  else
    os << ',';
  os << ',' << r.sharp_upper << ',' << r.closed_upper.decimal_string() << ','
     << r.prior_upper << ',';
  if (r.have_brute)
    os << to_string(r.winner) << ','
       << (r.split_only ? "true" : "false");
  else
    os << ',';
  os << ',' << (r.is_fib_minus_one ? "true" : "false");
  return os.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const TableRow& r : rows) os << to_csv(r) << '\n';
  return os.str();
}

std::string to_jsonl(const TableRow& r) {
  std::ostringstream os;
  os << "{\"n\":" << r.n << ",\"z\":" << r.z << ",\"iz\":" << r.iz
     << ",\"i_max\":" << r.i_max << ",\"lower\":" << r.lower
     << ",\"len_combine_largest\":" << r.len_combine_largest
     << ",\"len_split_largest\":" << r.len_split_largest
     << ",\"len_split_smallest\":" << r.len_split_smallest
     << ",\"len_greedy\":" << r.len_greedy;
  if (r.have_brute)
    os << ",\"brute_shortest\":" << r.brute_shortest
       << ",\"brute_longest\":" << r.brute_longest << ",\"winner\":\""
       << to_string(r.winner) << "\",\"split_only\":"
       << (r.split_only ? "true" : "false");
  os << ",\"sharp_upper\":" << r.sharp_upper << ",\"closed_upper\":\""
     << r.closed_upper.decimal_string() << "\",\"prior_upper\":"
     << r.prior_upper << ",\"is_fib_minus_one\":"
     << (r.is_fib_minus_one ? "true" : "false") << "}";
  return os.str();
}

std::string table_jsonl(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  for (const TableRow& r : rows) os << to_jsonl(r) << '\n';
  return os.str();
}

}  // namespace zeck
