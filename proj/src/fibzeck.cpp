#include "zeck/fibzeck.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace zeck {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("checked_add: 64-bit overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("checked_mul: 64-bit overflow");
  return r;
}

namespace {

std::array<std::int64_t, kMaxFibIndex + 1> make_fib_table() {
  std::array<std::int64_t, kMaxFibIndex + 1> t{};
  t[1] = 1;
  t[2] = 2;
  for (int i = 3; i <= kMaxFibIndex; ++i) t[i] = checked_add(t[i - 1], t[i - 2]);
  return t;
}

const std::array<std::int64_t, kMaxFibIndex + 1>& fib_table() {
  static const auto table = make_fib_table();
  return table;
}

}  // namespace

std::int64_t fib(int i) {
  if (i < 1 || i > kMaxFibIndex)
    throw std::out_of_range("fib: index " + std::to_string(i) +
                            " outside [1, " + std::to_string(kMaxFibIndex) +
                            "]");
  return fib_table()[i];
}

int i_max_of(std::int64_t n) {
  if (n < 1) throw std::domain_error("i_max_of: n must be >= 1");
  if (n >= fib_table()[kMaxFibIndex])
    return n == fib_table()[kMaxFibIndex]
               ? kMaxFibIndex
               : throw std::out_of_range("i_max_of: n exceeds F_90");
  int i = 1;
  while (fib_table()[i + 1] <= n) ++i;
  return i;
}

ZeckendorfProfile zeckendorf(std::int64_t n) {
  if (n < 1) throw std::domain_error("zeckendorf: n must be >= 1");
  ZeckendorfProfile p;
  p.n = n;
  p.i_max = i_max_of(n);
  p.deltas.assign(static_cast<std::size_t>(p.i_max) + 1, 0);
  std::int64_t rest = n;
  for (int i = p.i_max; i >= 1 && rest > 0; --i) {
    if (fib_table()[i] <= rest) {
      p.deltas[i] = 1;
      rest -= fib_table()[i];
      p.z += 1;
      p.iz += i;
    }
  }
  // Greedy always terminates with rest == 0; anything else is a table bug.
  if (rest != 0) throw std::logic_error("zeckendorf: decomposition failed");
  return p;
}

std::optional<int> fib_minus_one_index(std::int64_t n) {
  if (n < 1) throw std::domain_error("fib_minus_one_index: n must be >= 1");
  if (n >= fib_table()[kMaxFibIndex]) return std::nullopt;  // n+1 out of table
  for (int k = 2; k <= kMaxFibIndex; ++k) {
    if (fib_table()[k] == n + 1) return k;
    if (fib_table()[k] > n) break;
  }
  return std::nullopt;
}

}  // namespace zeck
