#include "zeck/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zeck {

namespace {

// Sign of a + b*sqrt(5).  One exact squaring decides the mixed-sign cases;
// a^2 == 5 b^2 has no nonzero integer solutions, so the zero branch only
// fires at the origin.
int sign_of(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) return 0;
  if (a >= 0 && b >= 0) return 1;
  if (a <= 0 && b <= 0) return -1;
  const __int128 a2 = static_cast<__int128>(a) * a;
  const __int128 b2 = static_cast<__int128>(5) * b * b;
  if (a > 0) return a2 > b2 ? 1 : -1;  // b < 0
  return b2 > a2 ? 1 : -1;             // a < 0, b > 0
}

}  // namespace

int QuadExact::cmp(const QuadExact& o) const {
  return sign_of(p - o.p, q - o.q);
}

double QuadExact::to_double() const {
  const long double s5 = sqrtl(5.0L);
  return static_cast<double>(
      (static_cast<long double>(p) + static_cast<long double>(q) * s5) / 2.0L);
}

std::string QuadExact::exact_string() const {
  if (q == 0) {
    if (p % 2 == 0) return std::to_string(p / 2);
    return std::to_string(p) + "/2";
  }
  std::string root;
  if (q == 1)
    root = "√5";
  else if (q == -1)
    root = "-√5";
  else
    root = std::to_string(q) + "√5";
  if (p == 0) return "(" + root + ")/2";
  return "(" + std::to_string(p) + (q > 0 ? "+" : "") + root + ")/2";
}

std::string QuadExact::decimal_string(int digits) const {
  if (digits < 0) digits = 0;
  if (digits > 17) digits = 17;  // keeps 10^digits inside int64
  std::int64_t scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  std::int64_t whole = 0, frac = 0;
  bool negative = false;
  if (q == 0) {
    // Exact rational p/2: scale, then truncate.
    std::int64_t num = p * scale / 2;
    negative = num < 0;
    if (negative) num = -num;
    whole = num / scale;
    frac = num % scale;
  } else {
    const long double s5 = sqrtl(5.0L);
    const long double v =
        (static_cast<long double>(p) + static_cast<long double>(q) * s5) /
        2.0L;
    negative = v < 0;
    const long double mag = negative ? -v : v;
    const long double scaled = truncl(mag * static_cast<long double>(scale));
    const std::int64_t num = static_cast<std::int64_t>(scaled);
    whole = num / scale;
    frac = num % scale;
  }
  char buf[64];
  if (digits > 0)
    std::snprintf(buf, sizeof buf, "%s%lld.%0*lld", negative ? "-" : "",
                  static_cast<long long>(whole), digits,
                  static_cast<long long>(frac));
  else
    std::snprintf(buf, sizeof buf, "%s%lld", negative ? "-" : "",
                  static_cast<long long>(whole));
  return buf;
}

std::int64_t coeff_a(int i) {
  if (i < 1 || i > kMaxFibIndex - 2)
    throw std::out_of_range("coeff_a: index " + std::to_string(i) +
                            " outside [1, " + std::to_string(kMaxFibIndex - 2) +
                            "]");
  return fib(i + 2) - i - 2;
}

std::int64_t sharp_upper(const ZeckendorfProfile& profile) {
  std::int64_t s = 0;
  for (int i = 1; i <= profile.i_max; ++i)
    if (profile.deltas[i]) s = checked_add(s, coeff_a(i));
  return s;
}

QuadExact closed_upper(const ZeckendorfProfile& profile) {
  // ((3+√5)/2) n - IZ - ((1+√5)/2) Z  ==  ((3n - 2 IZ - Z) + (n - Z) √5) / 2
  return {3 * profile.n - 2 * profile.iz - profile.z, profile.n - profile.z};
}

std::int64_t length_lower_bound(const ZeckendorfProfile& profile) {
  return profile.n - profile.z;
}

std::int64_t prior_upper(const ZeckendorfProfile& profile) {
  return 3 * profile.n - 3 * profile.z - profile.iz + 1;
}

BoundsReport bounds_report(const ZeckendorfProfile& profile) {
  BoundsReport r;
  r.n = profile.n;
  r.lower = length_lower_bound(profile);
  r.sharp = sharp_upper(profile);
  r.closed = closed_upper(profile);
  r.prior = prior_upper(profile);
  return r;
}

AccountingSystem build_system(int i_max) {
  if (i_max < 3)
    throw std::domain_error("build_system: i_max must be >= 3");
  const int rows = i_max - 1;
  const int cols = 2 * i_max - 3;
  AccountingSystem sys;
  sys.i_max = i_max;
  sys.m.assign(rows, std::vector<std::int64_t>(cols, 0));
  // Columns 1..i_max-1 hold MC_1, MS_2..MS_{i_max-1}; columns
  // i_max..2i_max-3 hold MC_2..MC_{i_max-1}.  Row i is the balance at board
  // index i+1.  The MC_{i} entry (fourth case) exists only for rows i >= 2,
  // i.e. columns j >= i_max.
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      std::int64_t v = 0;
      if (j == i)
        v = 1;
      else if (j == i + 1 && j <= i_max - 1)
        v = -2;
      else if (j == i + 3 && j <= i_max - 1)
        v = 1;
      else if (j == i + i_max - 2 && j >= i_max)
        v = 1;
      else if (j == i + i_max - 1 && j <= 2 * i_max - 3)
        v = -1;
      else if (j == i + i_max && j <= 2 * i_max - 3)
        v = -1;
      sys.m[i - 1][j - 1] = v;
    }
  }
  sys.a.assign(rows, std::vector<std::int64_t>(rows, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) sys.a[i][j] = sys.m[i][j];
  sys.rhs.assign(rows, 0);
  return sys;
}

AccountingSystem build_system(const ZeckendorfProfile& profile) {
  AccountingSystem sys = build_system(profile.i_max);
  for (int i = 2; i <= profile.i_max; ++i) sys.rhs[i - 2] = profile.deltas[i];
  return sys;
}

std::vector<std::vector<std::int64_t>> invert_unit_upper(
    const std::vector<std::vector<std::int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("invert_unit_upper: matrix not square");
    if (a[i][i] != 1)
      throw std::invalid_argument("invert_unit_upper: diagonal must be 1");
    for (int j = 0; j < i; ++j)
      if (a[i][j] != 0)
        throw std::invalid_argument("invert_unit_upper: not upper triangular");
  }
  // Gauss-Jordan on [A | I]: clearing columns right to left needs only
  // integer row operations because every pivot is 1.
  std::vector<std::vector<std::int64_t>> inv(
      n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  std::vector<std::vector<std::int64_t>> work = a;
  for (int p = n - 1; p >= 0; --p) {
    for (int i = p - 1; i >= 0; --i) {
      const std::int64_t f = work[i][p];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        work[i][j] = checked_add(work[i][j], checked_mul(-f, work[p][j]));
        inv[i][j] = checked_add(inv[i][j], checked_mul(-f, inv[p][j]));
      }
    }
  }
  return inv;
}

InverseClaimsReport verify_inverse_claims(int i_max) {
  if (i_max < 3 || i_max > 40)
    throw std::domain_error("verify_inverse_claims: i_max outside [3, 40]");
  InverseClaimsReport rep;
  rep.i_max = i_max;
  const AccountingSystem sys = build_system(i_max);
  const auto inv = invert_unit_upper(sys.a);
  const int n = i_max - 1;

  for (int j = 1; j <= n; ++j) {
    const std::int64_t expected = fib(j + 1) - 1;
    if (inv[0][j - 1] != expected) {
      rep.first_row = {false, 1, j, inv[0][j - 1], expected};
      break;
    }
  }
  for (int i = 0; i + 1 < n && rep.shift.pass; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      if (inv[i + 1][j + 1] != inv[i][j]) {
        rep.shift = {false, i + 2, j + 2, inv[i + 1][j + 1], inv[i][j]};
        break;
      }
    }
  }
  // Prepending 0 to the vector of column sums must reproduce coeff_a: the
  // k-th entry (1-based) equals coeff_a(k).
  for (int k = 1; k <= i_max; ++k) {
    std::int64_t got = 0;
    if (k >= 2)
      for (int i = 0; i < n; ++i) got += inv[i][k - 2];
    const std::int64_t expected = coeff_a(k);
    if (got != expected) {
      rep.column_sums = {false, 0, k, got, expected};
      break;
    }
  }
  return rep;
}

std::int64_t exact_length_identity(const MoveTally& t,
                                   const ZeckendorfProfile& profile) {
  const std::int64_t length = t.total();
  std::int64_t bound = sharp_upper(profile);
  std::int64_t correction = 0;
  for (const auto& [i, c] : t.mc)
    if (i >= 2) correction += (i - 1) * c;
  return length - (bound - correction);
}

}  // namespace zeck
