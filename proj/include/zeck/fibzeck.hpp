#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zeck {

// Largest index whose Fibonacci number fits in a signed 64-bit integer.
inline constexpr int kMaxFibIndex = 90;

// Overflow-checked 64-bit arithmetic. Throws std::overflow_error instead of
// wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Fibonacci numbers indexed F_1 = 1, F_2 = 2, F_{i+1} = F_i + F_{i-1},
// i.e. 1, 2, 3, 5, 8, 13, ...  (F_i here equals the classical Fib(i+1) of
// the 1, 1, 2, 3, ... sequence.)  Valid for 1 <= i <= kMaxFibIndex.
std::int64_t fib(int i);

struct ZeckendorfProfile {
  std::int64_t n = 0;
  std::vector<std::int64_t> deltas;  // deltas[i] in {0,1}; index 0 unused
  std::int64_t z = 0;                // number of summands
  std::int64_t iz = 0;               // sum of the summand indices
  int i_max = 0;                     // largest index with deltas[i] == 1

  bool operator==(const ZeckendorfProfile&) const = default;
};

// The unique decomposition of n >= 1 into distinct, pairwise non-adjacent
// Fibonacci numbers (greedy largest-first).
ZeckendorfProfile zeckendorf(std::int64_t n);

// k >= 2 such that n + 1 == F_k, if such an index exists.
std::optional<int> fib_minus_one_index(std::int64_t n);

// Largest i with F_i <= n.
int i_max_of(std::int64_t n);

}  // namespace zeck
