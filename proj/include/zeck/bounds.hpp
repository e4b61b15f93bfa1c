#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeck/engine.hpp"
#include "zeck/fibzeck.hpp"

namespace zeck {

// Exact value (p + q*sqrt(5)) / 2.  Comparisons are decided by integer sign
// analysis plus one squaring, never by floating point, so ordering checks
// against game lengths are exact.
struct QuadExact {
  std::int64_t p = 0;
  std::int64_t q = 0;

  static QuadExact from_int(std::int64_t m) { return {2 * m, 0}; }

  QuadExact operator+(const QuadExact& o) const { return {p + o.p, q + o.q}; }
  QuadExact operator-(const QuadExact& o) const { return {p - o.p, q - o.q}; }
  QuadExact scaled(std::int64_t k) const { return {p * k, q * k}; }

  // -1, 0, +1 as this value compares to o.
  int cmp(const QuadExact& o) const;
  bool operator==(const QuadExact& o) const { return p == o.p && q == o.q; }
  bool operator<(const QuadExact& o) const { return cmp(o) < 0; }
  bool operator<=(const QuadExact& o) const { return cmp(o) <= 0; }

  double to_double() const;

  // "(2+2√5)/2", "(1+√5)/2", or a plain integer when q == 0 and p is even.
  std::string exact_string() const;
  // Plain decimal, truncated toward zero at `digits` fractional places.
  // Rendering goes through long double; accurate to well under 1e-9 for the
  // magnitudes this library produces, and exact when q == 0.
  std::string decimal_string(int digits = 7) const;
};

// a_i = F_{i+2} - i - 2: the largest number of moves a game can spend, per
// final summand F_i.  Valid for 1 <= i <= 88.
std::int64_t coeff_a(int i);

// Sum of coeff_a(i) over the profile's summands: an exact upper bound on
// game length that is attained exactly when n + 1 is a Fibonacci number.
std::int64_t sharp_upper(const ZeckendorfProfile& profile);

// ((3+sqrt5)/2) n - IZ(n) - ((1+sqrt5)/2) Z(n), the closed-form relaxation
// of sharp_upper.
QuadExact closed_upper(const ZeckendorfProfile& profile);

// n - Z(n): every game takes at least this many moves, and the two
// combine-first strategies realize it.
std::int64_t length_lower_bound(const ZeckendorfProfile& profile);

// 3n - 3Z(n) - IZ(n) + 1, an earlier, weaker upper bound kept for
// comparison columns.
std::int64_t prior_upper(const ZeckendorfProfile& profile);

struct BoundsReport {
  std::int64_t n = 0;
  std::int64_t lower = 0;
  std::int64_t sharp = 0;
  QuadExact closed;
  std::int64_t prior = 0;
};

BoundsReport bounds_report(const ZeckendorfProfile& profile);

// The move-accounting balance equations as a linear system M x = rhs, where
// x = (MC_1, MS_2..MS_{i_max-1}, MC_2..MC_{i_max-1}) and row i carries the
// balance at board index i+1.  A is the left square block of M over the
// splitting-class tallies; it is unit upper triangular.
struct AccountingSystem {
  int i_max = 0;
  std::vector<std::vector<std::int64_t>> m;  // (i_max-1) x (2*i_max-3)
  std::vector<std::vector<std::int64_t>> a;  // left (i_max-1) x (i_max-1)
  std::vector<std::int64_t> rhs;             // c_2 .. c_{i_max}, zero if unset
};

// Requires i_max >= 3.  The profile overload fills rhs with the terminal
// counts delta_2 .. delta_{i_max}.
AccountingSystem build_system(int i_max);
AccountingSystem build_system(const ZeckendorfProfile& profile);

// Exact inverse of a unit upper-triangular integer matrix (Gauss-Jordan;
// no division arises).
std::vector<std::vector<std::int64_t>> invert_unit_upper(
    const std::vector<std::vector<std::int64_t>>& a);

struct ClaimCheck {
  bool pass = true;
  // First failing cell, when pass is false.
  int row = 0;
  int col = 0;
  std::int64_t got = 0;
  std::int64_t expected = 0;
};

struct InverseClaimsReport {
  int i_max = 0;
  ClaimCheck first_row;    // inv[1][j] == F_{j+1} - 1
  ClaimCheck shift;        // inv[i+1][j+1] == inv[i][j]
  ClaimCheck column_sums;  // ones * inv, prepended with 0, == coeff_a(1..)
  bool all_pass() const {
    return first_row.pass && shift.pass && column_sums.pass;
  }
};

// Checks the three structural claims about A^{-1} for 3 <= i_max <= 40.
InverseClaimsReport verify_inverse_claims(int i_max);

// Residual of the exact length identity for a finished all-ones game:
// length - (sum_i coeff_a(i) * delta_i - sum_{i>=2} (i-1) * MC_i).
// Zero for every legal complete trace.
std::int64_t exact_length_identity(const MoveTally& t,
                                   const ZeckendorfProfile& profile);

}  // namespace zeck
