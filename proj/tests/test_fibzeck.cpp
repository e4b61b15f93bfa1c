#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "zeck/fibzeck.hpp"

using namespace zeck;

TEST_CASE("fibonacci values under the 1,2,3,5 indexing") {
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 2);
  CHECK(fib(3) == 3);
  CHECK(fib(4) == 5);
  CHECK(fib(5) == 8);
  CHECK(fib(10) == 89);
  CHECK(fib(90) == 4660046610375530309LL);
  for (int i = 3; i <= 90; ++i) CHECK(fib(i) == fib(i - 1) + fib(i - 2));
  CHECK_THROWS_AS(fib(0), std::out_of_range);
  CHECK_THROWS_AS(fib(91), std::out_of_range);
}

TEST_CASE("decompositions match an independent subset enumeration") {
  // Oracle: enumerate every subset of indices 1..16 with no two adjacent
  // and record its sum.  Each n <= 2000 must be hit exactly once, by the
  // subset zeckendorf() returns.
  const int top = 16;  // fib(16) = 1597, fib(17) > 2000
  const std::int64_t limit = 2000;
  std::map<std::int64_t, std::vector<unsigned>> by_sum;
  for (unsigned mask = 1; mask < (1u << top); ++mask) {
    if (mask & (mask << 1)) continue;  // adjacent indices used
    std::int64_t sum = 0;
    for (int i = 0; i < top; ++i)
      if (mask & (1u << i)) sum += fib(i + 1);
    if (sum <= limit) by_sum[sum].push_back(mask);
  }
  for (std::int64_t n = 1; n <= limit; ++n) {
    REQUIRE(by_sum.count(n) == 1);
    REQUIRE(by_sum[n].size() == 1);
    const unsigned mask = by_sum[n][0];
    const ZeckendorfProfile p = zeckendorf(n);
    for (int i = 1; i <= top; ++i) {
      const std::int64_t want = (mask >> (i - 1)) & 1u;
      CHECK((i <= p.i_max ? p.deltas[static_cast<std::size_t>(i)] : 0) == want);
    }
  }
}

TEST_CASE("profile summary fields") {
  const ZeckendorfProfile p = zeckendorf(4);  // 4 = 3 + 1
  CHECK(p.z == 2);
  CHECK(p.iz == 4);
  CHECK(p.i_max == 3);
  const ZeckendorfProfile q = zeckendorf(2);
  CHECK(q.z == 1);
  CHECK(q.iz == 2);
  CHECK(q.i_max == 2);
  const ZeckendorfProfile one = zeckendorf(1);
  CHECK(one.z == 1);
  CHECK(one.iz == 1);
  CHECK(one.i_max == 1);
  CHECK_THROWS(zeckendorf(0));
}

TEST_CASE("largest index fits the greedy window") {
  CHECK(i_max_of(1) == 1);
  CHECK(i_max_of(2) == 2);
  CHECK(i_max_of(3) == 3);
  CHECK(i_max_of(4) == 3);
  CHECK(i_max_of(5) == 4);
  CHECK(i_max_of(fib(90)) == 90);
  CHECK_THROWS(i_max_of(fib(90) + 1));
}

TEST_CASE("n + 1 Fibonacci detection") {
  CHECK(fib_minus_one_index(1) == 2);
  CHECK(fib_minus_one_index(2) == 3);
  CHECK(fib_minus_one_index(4) == 4);
  CHECK(fib_minus_one_index(7) == 5);
  CHECK(fib_minus_one_index(12) == 6);
  CHECK(fib_minus_one_index(20) == 7);
  CHECK_FALSE(fib_minus_one_index(3).has_value());
  CHECK_FALSE(fib_minus_one_index(5).has_value());
  CHECK_FALSE(fib_minus_one_index(21).has_value());
  CHECK(fib_minus_one_index(fib(90) - 1) == 90);
  CHECK_FALSE(fib_minus_one_index(fib(90)).has_value());
}

TEST_CASE("checked arithmetic rejects overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(6, 7) == 42);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
}
