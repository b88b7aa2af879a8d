#include <doctest.h>

#include "cob2/rational.hpp"

using cob2::Rational;

TEST_CASE("rationals reduce and normalize signs") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("field arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(7, 2) > Rational(10, 3));
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("string round trips") {
  CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("division by zero and overflow throw") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational square detection") {
  Rational root;
  CHECK(cob2::rational_sqrt(Rational(9, 4), &root));
  CHECK(root == Rational(3, 2));
  CHECK(cob2::rational_sqrt(Rational(0), &root));
  CHECK(root == Rational(0));
  CHECK_FALSE(cob2::rational_sqrt(Rational(1, 2), &root));
  CHECK_FALSE(cob2::rational_sqrt(Rational(-1), &root));
  CHECK_FALSE(cob2::rational_sqrt(Rational(8), &root));
}
