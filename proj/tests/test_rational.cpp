#include <doctest.h>

#include <stdexcept>

#include "polyfix/rational.hpp"

using polyfix::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4).num() == -1);
  CHECK(Rational(-2, 4).den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(0, 7).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts integers and p/q, rejects everything else") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/8") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-12") == Rational(-12));
  for (const char* bad : {"1/0", "x", "1/2/3", "", "1/", "/2", "1.5", "2/-3", " 1"}) {
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1) - Rational(5, 12) == Rational(7, 12));
  CHECK(Rational(10, 11) / Rational(5, 22) == Rational(4));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

  Rational acc;
  for (int i = 0; i < 7; ++i) acc += Rational(1, 7);
  CHECK(acc == Rational(1));
}

TEST_CASE("comparison is exact at tight boundaries") {
  CHECK(Rational(5, 12) > Rational(2, 5));
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(10, 11) < Rational(1));
  CHECK(Rational(8, 7) > Rational(1));
  CHECK(Rational(7, 9) < Rational(1));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("overflow of a reduced result throws instead of rounding") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  // A large intermediate that reduces back into range is fine.
  CHECK(big / big == Rational(1));
}

TEST_CASE("rendering") {
  CHECK(Rational(8, 7).str() == "8/7");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}
