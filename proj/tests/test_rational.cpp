#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "gw/errors.hpp"
#include "gw/rational.hpp"

using namespace gw;

TEST_CASE("construction normalizes to lowest terms, denominator positive") {
  const Rational half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);

  const Rational neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons and predicates") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("12/8") == Rational(3, 2));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(-1, 8).str() == "-1/8");
  CHECK_THROWS_AS(Rational::from_string("abc"), DataError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), DataError);
  CHECK_THROWS_AS(Rational::from_string(""), DataError);

  std::ostringstream os;
  os << Rational(-5, 3);
  CHECK(os.str() == "-5/3");
}

TEST_CASE("round trip on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const long num = static_cast<long>(rng() % 20001) - 10000;
    const long den = static_cast<long>(rng() % 9999) + 1;
    const Rational r(num, den);
    CHECK(Rational::from_string(r.str()) == r);
  }
}

TEST_CASE("factorial, binomial, pow") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK(factorial(30).str() == "265252859812191058636308480000000");
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 3) == Rational(1));
  CHECK(binomial(2, 3) == Rational(0));
  CHECK(pow(Rational(1, 2), 10) == Rational(1, 1024));
  CHECK(pow(Rational(-2), 3) == Rational(-8));
  CHECK(pow(Rational(7), 0) == Rational(1));
}
