#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "invopt/rational.hpp"

using invopt::Rational;
using invopt::make_rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(make_rational(3, -2).str() == "-3/2");
  CHECK(make_rational(0, 5).str() == "0");
  CHECK(make_rational(0, 5).den() == 1);
  CHECK(make_rational(6, 4).str() == "3/2");
  CHECK(make_rational(-6, -4).str() == "3/2");
  CHECK(make_rational(7, 1).is_integer());
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 10) * Rational(10) == Rational(1));
  CHECK(Rational(-1, 2) - Rational(1, 2) == Rational(-1));
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  // repeated addition never drifts
  Rational acc;
  for (int i = 0; i < 300; ++i) acc += Rational(1, 300);
  CHECK(acc == Rational(1));
}

TEST_CASE("arbitrary precision") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(10);
  CHECK(big.str() == "1" + std::string(40, '0'));
  CHECK(big / big == Rational(1));
  CHECK((big + Rational(1, 3)) - big == Rational(1, 3));
}

TEST_CASE("string round trip") {
  for (const char* text : {"0", "-1", "3/2", "-3/2", "1000000000000000000000/7"}) {
    CHECK(Rational::from_string(text).str() == text);
  }
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational::from_string("+5") == Rational(5));
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
}

TEST_CASE("ordering and printing") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(-9, 2));
  CHECK(Rational(2, 4).abs() == Rational(1, 2));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK(Rational(-2).sign() == -1);
  std::ostringstream os;
  os << Rational(-3, 9);
  CHECK(os.str() == "-1/3");
}
