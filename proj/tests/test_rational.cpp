#include <doctest.h>

#include "contactlab/fuzz.hpp"
#include "contactlab/rational.hpp"

using namespace contactlab;

TEST_CASE("rational normalization and printing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");  // denominator made positive
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(1, 3).denominator() == 3);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3), sixth(1, 6);
  CHECK(third + sixth == Rational(1, 2));
  CHECK(third - sixth == sixth);
  CHECK(third * sixth == Rational(1, 18));
  CHECK(third / sixth == Rational(2));
  CHECK_THROWS_AS(third / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(-5, 7).sign() == -1);
}

TEST_CASE("field axioms on random rationals") {
  FuzzRng rng(42);
  for (int t = 0; t < 500; ++t) {
    Rational a(rng.range(-50, 50), rng.range(1, 20));
    Rational b(rng.range(-50, 50), rng.range(1, 20));
    Rational c(rng.range(-50, 50), rng.range(1, 20));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // parse/print round trip
    CHECK(Rational::parse(a.str()) == a);
  }
}
