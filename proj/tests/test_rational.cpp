#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coopet/rational.hpp"

using namespace coopet;

TEST_CASE("rationals are stored canonically") {
  Rational r = make_rational(6, 8);
  CHECK(numerator(r) == 3);
  CHECK(denominator(r) == 4);

  Rational neg = make_rational(3, -9);
  CHECK(numerator(neg) == -1);
  CHECK(denominator(neg) == 3);

  Rational zero = make_rational(0, 7);
  CHECK(numerator(zero) == 0);
  CHECK(denominator(zero) == 1);

  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic stays canonical") {
  Rational r = make_rational(1, 3) + make_rational(1, 6);
  CHECK(r == make_rational(1, 2));
  CHECK(denominator(r) == 2);
  CHECK(gcd(abs(numerator(r)), denominator(r)) == 1);
}

TEST_CASE("formatting") {
  CHECK(format_rational(make_rational(7, 9)) == "7/9");
  CHECK(format_rational(make_rational(-1, 2)) == "-1/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(make_rational(10, 5)) == "2");
}

TEST_CASE("parsing") {
  CHECK(parse_fraction("7/9") == make_rational(7, 9));
  CHECK(parse_fraction("-13/20") == make_rational(-13, 20));
  CHECK(parse_fraction("42") == Rational(42));
  CHECK(parse_fraction("0") == Rational(0));

  for (const char* bad : {"", "-", "1/", "/2", "1/0", "a/2", "1/2/3", " 1/2", "1 /2",
                          "1/-2", "+1/2", "1.5"})
    CHECK_THROWS_AS(parse_fraction(bad), std::invalid_argument);
}

TEST_CASE("format/parse round trip on random values") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long long> den(1, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    Rational r = make_rational(num(rng), den(rng));
    CHECK(parse_fraction(format_rational(r)) == r);
  }
  // and well beyond 64 bits
  Rational big = make_rational(factorial(40), factorial(33) * 7 + 1);
  CHECK(parse_fraction(format_rational(big)) == big);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(33) == BigInt("8683317618811886495518194401280000000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}
