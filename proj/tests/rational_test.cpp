#include <doctest.h>

#include <random>

#include "lexp/rational.hpp"

using lexp::DivisionByZeroError;
using lexp::Rational;
using lexp::ZeroDenominatorError;

TEST_CASE("construction reduces and normalizes signs") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(3, -9).den() == 3);
  CHECK(Rational(0, 7).to_string() == "0/1");
  CHECK(Rational(5, 10) == Rational(50, 100));
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominatorError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(2, 3) * Rational(-1, 12) == Rational(-1, 18));
  // gamma_4 for n = 3: (2/3)(-1/12) + (1/3)(1/4) = 1/36
  CHECK(Rational(-1, 18) + Rational(1, 12) == Rational(1, 36));
  CHECK(Rational(1, 4) / Rational(1, 3) == Rational(3, 4));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZeroError);
}

TEST_CASE("comparison matches real order") {
  CHECK(Rational(96, 35) < Rational(2) + Rational(24, 29));  // p_{n+1} < p_cmw at n = 3
  CHECK(Rational(1, 3) == Rational(1, 3));
  CHECK(Rational(-1, 12) < Rational(0));
  CHECK(Rational(7, 6) > Rational(1));
}

TEST_CASE("harmonic_sum") {
  CHECK(lexp::harmonic_sum(2, 3) == Rational(5, 6));
  CHECK(lexp::harmonic_sum(1, 1) == Rational(1));
  CHECK(lexp::harmonic_sum(1, 10) == Rational(7381, 2520));
  CHECK_THROWS_AS(lexp::harmonic_sum(3, 2), std::domain_error);
  CHECK_THROWS_AS(lexp::harmonic_sum(0, 5), std::domain_error);
}

TEST_CASE("to_decimal rounds half to even") {
  CHECK(Rational(96, 35).to_decimal(4) == "2.7429");
  CHECK(Rational(12, 5).to_decimal(1) == "2.4");
  CHECK(Rational(1, 3).to_decimal(3) == "0.333");
  // Exact ties: 0.125 -> 0.12 (down to even), 0.375 -> 0.38 (up to even).
  CHECK(Rational(1, 8).to_decimal(2) == "0.12");
  CHECK(Rational(3, 8).to_decimal(2) == "0.38");
  CHECK(Rational(1, 4).to_decimal(1) == "0.2");
  CHECK(Rational(3, 4).to_decimal(1) == "0.8");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.12");
  CHECK(Rational(-1, 10000).to_decimal(2) == "0.00");  // rounds away the sign
  CHECK(Rational(7).to_decimal(2) == "7.00");
  CHECK_THROWS_AS(Rational(1, 3).to_decimal(0), std::domain_error);
}

TEST_CASE("string round trips") {
  CHECK(Rational::from_string("26/35") == Rational(26, 35));
  CHECK(Rational::from_string("-1/12") == Rational(-1, 12));
  CHECK(Rational::from_string("17") == Rational(17));
  CHECK_THROWS_AS(Rational::from_string("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), ZeroDenominatorError);
}

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 60);
  return {num(rng), den(rng)};
}

}  // namespace

TEST_CASE("field laws hold exactly on random rationals") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(Rational::from_string(a.to_string()) == a);
    // compare agrees with the sign of the difference
    const Rational diff = a - b;
    if (a < b) CHECK(diff.sign() < 0);
    if (a == b) CHECK(diff.sign() == 0);
    if (a > b) CHECK(diff.sign() > 0);
  }
}
