#include "doctest.h"
#include "oracles.hpp"
#include "schmidt/exact_arith.hpp"

using namespace schmidt;

TEST_CASE("binom: examples") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 2) == 1);
  CHECK(binom(7, -1) == 0);
  CHECK(binom(-3, -2) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(-5, 0) == 1);
}

TEST_CASE("binom: continuation at negative tops matches the rational polynomial") {
  // C(t, 2) at t = -1 is (-1)(-2)/2.
  CHECK(oracle::falling_binom(-1, 2) == 1);
  for (long t = -20; t <= 20; ++t)
    for (long k = 0; k <= 20; ++k) {
      mpq_class expect = oracle::falling_binom(t, k);
      REQUIRE(expect.get_den() == 1);
      CHECK_MESSAGE(binom(t, k) == expect.get_num(), "t=" << t << " k=" << k);
      CHECK(binom(t, k) == oracle::gmp_binom(t, k));
    }
}

TEST_CASE("binom: Pascal recurrence over negative and positive tops") {
  for (long t = -20; t <= 20; ++t)
    for (long k = 1; k <= 20; ++k)
      CHECK(binom(t, k) == binom(t - 1, k - 1) + binom(t - 1, k));
}

TEST_CASE("binom: large arguments stay exact") {
  CHECK(binom(200, 100) == oracle::factorial_binom(200, 100));
  CHECK(binom(Integer("100000000000000000000"), 3) ==
        oracle::falling_binom(Integer("100000000000000000000"), 3).get_num());
}

TEST_CASE("rising_factorial") {
  CHECK(rising_factorial(3, 2) == 12);
  CHECK(rising_factorial(5, 0) == 1);
  CHECK(rising_factorial(1, 2) == 2);
  CHECK(rising_factorial(-2, 3) == 0);
  CHECK(rising_factorial(-3, 2) == 6);
  for (long x = 1; x <= 12; ++x)
    for (unsigned long n = 0; n <= 12; ++n)
      CHECK(rising_factorial(x, n) == binom(x + static_cast<long>(n) - 1, static_cast<long>(n)) * oracle::fact(n));
}

TEST_CASE("central_binom") {
  CHECK(central_binom(0) == 1);
  CHECK(central_binom(2) == 6);
  CHECK(central_binom(5) == 252);
  CHECK(oracle::fact(10) / (oracle::fact(5) * oracle::fact(5)) == 252);
  for (unsigned long k = 0; k <= 64; ++k) {
    CHECK(central_binom(k) == binom(Integer(2 * k), static_cast<long>(k)));
    CHECK(central_binom(k) == oracle::factorial_binom(2 * k, k));
  }
}

TEST_CASE("saalschutz_coeff") {
  CHECK(saalschutz_coeff(1, 1, 1) == 1);
  CHECK(saalschutz_coeff(1, 2, 0) == 3);
  CHECK(saalschutz_coeff(2, 2, 1) == 2);
  // 3! 1! / (2! 2!)
  CHECK(saalschutz_coeff(1, 2, 1) == Rational(3, 2));
  CHECK(saalschutz_coeff(2, 2, 0) == 6);
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned k = 0; k <= 6; ++k)
      for (unsigned i = 0; i <= k; ++i) {
        mpq_class expect(oracle::fact(m + k) * oracle::fact(i), oracle::fact(m + i) * oracle::fact(k));
        expect.canonicalize();
        Rational got = saalschutz_coeff(m, k, i);
        CHECK(got == expect);
        CHECK(got.get_den() > 0);
        CHECK(gcd(got.get_num(), got.get_den()) == 1);
      }
  CHECK_THROWS_AS(saalschutz_coeff(1, 1, 2), std::invalid_argument);
}

TEST_CASE("exact_quotient and residue") {
  CHECK(exact_quotient(12, 4, "t") == 3);
  CHECK_THROWS_AS(exact_quotient(13, 4, "t"), IntegralityError);
  CHECK_THROWS_AS(exact_quotient(13, 0, "t"), IntegralityError);
  CHECK(residue(-6, 4) == 2);
  CHECK(residue(6, 4) == 2);
  CHECK(residue(8, 4) == 0);
}

TEST_CASE("parse_integer") {
  CHECK(parse_integer("-42") == -42);
  CHECK(parse_integer("123456789012345678901234567890") == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
}
