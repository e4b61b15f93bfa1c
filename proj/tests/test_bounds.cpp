#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "zeck/bounds.hpp"

using namespace zeck;

TEST_CASE("exact quadratic comparisons need no tolerance") {
  const QuadExact phi{1, 1};  // (1+√5)/2
  CHECK(QuadExact::from_int(1) < phi);
  CHECK(phi < QuadExact::from_int(2));
  CHECK(phi.cmp(phi) == 0);
  CHECK((phi + phi) == QuadExact{2, 2});
  CHECK((phi - phi) == QuadExact{0, 0});
  CHECK(phi.scaled(3) == QuadExact{3, 3});
  // 161/72 is a convergent of √5: the difference is below 1e-5, far past
  // what a double-based comparison could be trusted with at scale.
  CHECK(QuadExact{-161, 72}.cmp(QuadExact{0, 0}) < 0);
  CHECK(QuadExact{161, -72}.cmp(QuadExact{0, 0}) > 0);
  CHECK(QuadExact{-323, 144}.cmp(QuadExact{-161, 72}) < 0);
}

TEST_CASE("exact and decimal renderings") {
  CHECK(QuadExact{2, 2}.exact_string() == "(2+2√5)/2");
  CHECK(QuadExact{1, 1}.exact_string() == "(1+√5)/2");
  CHECK(QuadExact{0, 0}.exact_string() == "0");
  CHECK(QuadExact::from_int(3).exact_string() == "3");
  CHECK(QuadExact{3, 0}.exact_string() == "3/2");
  CHECK(QuadExact{0, -1}.exact_string() == "(-√5)/2");
  CHECK(QuadExact{1, -3}.exact_string() == "(1-3√5)/2");

  CHECK(QuadExact{2, 2}.decimal_string() == "3.2360679");
  CHECK(QuadExact{1, 1}.decimal_string() == "1.6180339");
  CHECK(QuadExact{0, 0}.decimal_string() == "0.0000000");
  CHECK(QuadExact::from_int(3).decimal_string() == "3.0000000");
  CHECK(QuadExact{3, 0}.decimal_string() == "1.5000000");
  CHECK(QuadExact{1, 1}.decimal_string(3) == "1.618");
  CHECK(QuadExact{-1, -1}.decimal_string() == "-1.6180339");
  CHECK(QuadExact{1, 1}.to_double() == doctest::Approx(1.6180339887));
}

TEST_CASE("per-summand coefficients") {
  const std::int64_t want[] = {0, 1, 3, 7, 14, 26, 46, 79};
  for (int i = 1; i <= 8; ++i) CHECK(coeff_a(i) == want[i - 1]);
  for (int i = 2; i <= 60; ++i)
    CHECK(coeff_a(i) == coeff_a(i - 1) + fib(i) - 1);
  CHECK_THROWS(coeff_a(0));
  CHECK_THROWS(coeff_a(89));
}

TEST_CASE("bound values on small boards") {
  const BoundsReport b4 = bounds_report(zeckendorf(4));
  CHECK(b4.lower == 2);
  CHECK(b4.sharp == 3);
  CHECK(b4.closed == QuadExact{2, 2});
  CHECK(b4.prior == 3);

  const BoundsReport b2 = bounds_report(zeckendorf(2));
  CHECK(b2.lower == 1);
  CHECK(b2.sharp == 1);
  CHECK(b2.closed == QuadExact{1, 1});
  CHECK(b2.prior == 2);

  const BoundsReport b1 = bounds_report(zeckendorf(1));
  CHECK(b1.lower == 0);
  CHECK(b1.sharp == 0);
  CHECK(b1.closed == QuadExact{0, 0});
  CHECK(b1.prior == 0);

  CHECK(sharp_upper(zeckendorf(3)) == 3);
}

TEST_CASE("balance system shape and small instances") {
  CHECK_THROWS_AS(build_system(2), std::domain_error);

  const AccountingSystem s3 = build_system(3);
  REQUIRE(s3.m.size() == 2);
  REQUIRE(s3.m[0].size() == 3);
  CHECK(s3.m[0] == std::vector<std::int64_t>{1, -2, -1});
  CHECK(s3.m[1] == std::vector<std::int64_t>{0, 1, 1});
  CHECK(invert_unit_upper(s3.a) ==
        std::vector<std::vector<std::int64_t>>{{1, 2}, {0, 1}});

  const AccountingSystem s5 = build_system(5);
  CHECK(s5.a == std::vector<std::vector<std::int64_t>>{{1, -2, 0, 1},
                                                       {0, 1, -2, 0},
                                                       {0, 0, 1, -2},
                                                       {0, 0, 0, 1}});
  CHECK(invert_unit_upper(s5.a) ==
        std::vector<std::vector<std::int64_t>>{
            {1, 2, 4, 7}, {0, 1, 2, 4}, {0, 0, 1, 2}, {0, 0, 0, 1}});

  const AccountingSystem sp = build_system(zeckendorf(4));  // i_max = 3
  CHECK(sp.rhs == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("a row times its inverse gives the identity") {
  for (int im : {3, 4, 5, 8, 13, 40}) {
    const AccountingSystem sys = build_system(im);
    const auto inv = invert_unit_upper(sys.a);
    const int n = im - 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t dot = 0;
        for (int k = 0; k < n; ++k) dot += sys.a[i][k] * inv[k][j];
        CHECK(dot == (i == j ? 1 : 0));
      }
  }
  CHECK_THROWS(invert_unit_upper({{1, 0}, {1, 1}}));
  CHECK_THROWS(invert_unit_upper({{2}}));
}

TEST_CASE("inverse structure claims") {
  for (int im : {3, 5, 12, 40}) {
    const InverseClaimsReport rep = verify_inverse_claims(im);
    CHECK(rep.first_row.pass);
    CHECK(rep.shift.pass);
    CHECK(rep.column_sums.pass);
    CHECK(rep.all_pass());
  }
  CHECK_THROWS(verify_inverse_claims(2));
  CHECK_THROWS(verify_inverse_claims(41));
}

TEST_CASE("length identity residuals on known tallies") {
  const ZeckendorfProfile p4 = zeckendorf(4);
  MoveTally longest;  // C1 C1 S2
  longest.mc[1] = 2;
  longest.ms[2] = 1;
  CHECK(exact_length_identity(longest, p4) == 0);

  MoveTally shortest;  // C1 C2
  shortest.mc[1] = 1;
  shortest.mc[2] = 1;
  CHECK(exact_length_identity(shortest, p4) == 0);

  MoveTally forced;  // n=2: C1
  forced.mc[1] = 1;
  CHECK(exact_length_identity(forced, zeckendorf(2)) == 0);

  MoveTally padded = longest;
  padded.ms[2] += 1;
  CHECK(exact_length_identity(padded, p4) != 0);
}
