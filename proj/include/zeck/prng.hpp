#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace zeck {

// splitmix64: stable across platforms, used to derive per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw in [0, k). Rejection sampling on the raw engine output;
// std::uniform_int_distribution is not reproducible across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t rem =
      (std::numeric_limits<std::uint64_t>::max() % k + 1) % k;
  const std::uint64_t last_ok = std::numeric_limits<std::uint64_t>::max() - rem;
  std::uint64_t x = rng();
  while (x > last_ok) x = rng();
  return x % k;
}

}  // namespace zeck
