#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "zeck/sweep.hpp"

using namespace zeck;

TEST_CASE("table row for n=4 is pinned byte for byte") {
  SweepOptions opt;
  const TableRow r = table_row(4, opt);
  CHECK(to_csv(r) == "4,2,4,3,2,2,2,3,3,2,3,3,3.2360679,3,Player2,true,true");
}

TEST_CASE("csv header names every column") {
  CHECK(csv_header() ==
        "n,z,iz,i_max,lower,len_combine_largest,len_split_largest,"
        "len_split_smallest,len_greedy,brute_shortest,brute_longest,"
        "sharp_upper,closed_upper_decimal,prior_upper,winner,split_only,"
        "is_fib_minus_one");
}

TEST_CASE("brute-force cells go empty past the solver cutoff") {
  SweepOptions opt;
  opt.solver_max_n = 4;
  const TableRow r5 = table_row(5, opt);
  CHECK_FALSE(r5.have_brute);
  // closed form at n=5: (6+4√5)/2 = 3 + 2√5
  const std::string cut = to_csv(r5);
  CHECK(cut == "5,1,4,4,4,4,4,5,5,,,7,7.4721359,9,,,false");
  // same column count in both regimes
  const std::string full = to_csv(table_row(4, opt));
  CHECK(std::count(full.begin(), full.end(), ',') ==
        std::count(cut.begin(), cut.end(), ','));
}

TEST_CASE("parallel rows equal the serial reference") {
  SweepOptions opt;
  opt.solver_max_n = 15;
  const auto par = compute_rows(1, 60, opt);
  const auto ser = compute_rows_serial(1, 60, opt);
  REQUIRE(par.size() == 60);
  CHECK(par == ser);
  CHECK(table_csv(par) == table_csv(ser));
  CHECK(table_csv(compute_rows(1, 60, opt)) == table_csv(par));
  CHECK_THROWS(compute_rows(3, 2, opt));
  CHECK_THROWS(compute_rows(0, 2, opt));
}

TEST_CASE("jsonl rows carry brute keys only when computed") {
  SweepOptions opt;
  opt.solver_max_n = 4;
  const std::string with = to_jsonl(table_row(4, opt));
  CHECK(with.find("\"brute_longest\":3") != std::string::npos);
  CHECK(with.find("\"winner\":\"Player2\"") != std::string::npos);
  const std::string without = to_jsonl(table_row(5, opt));
  CHECK(without.find("brute_longest") == std::string::npos);
  CHECK(without.find("\"sharp_upper\":7") != std::string::npos);
  const std::string lines = table_jsonl(compute_rows(4, 5, opt));
  CHECK(lines == with + "\n" + without + "\n");
}

TEST_CASE("a tiny state cap surfaces as the cap error") {
  SweepOptions opt;
  opt.solver_max_n = 10000;
  opt.state_cap = 10;
  CHECK_THROWS_AS(compute_rows(30, 40, opt), StateCapExceeded);
  CHECK_THROWS_AS(compute_rows_serial(30, 40, opt), StateCapExceeded);
}
