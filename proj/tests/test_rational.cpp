#include <doctest.h>

#include "degenstir/rational.hpp"

using namespace degenstir;

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) * Rational(1) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
}

TEST_CASE("sign lives in the numerator") {
    const Rational q(7, -3);
    CHECK(q.numerator() == BigInt(-7));
    CHECK(q.denominator() == BigInt(3));
    CHECK(q == Rational(-7, 3));
    CHECK((-q).numerator() == BigInt(7));
}

TEST_CASE("zero is canonical") {
    const Rational z(0, 5);
    CHECK(z.is_zero());
    CHECK(z.numerator() == BigInt(0));
    CHECK(z.denominator() == BigInt(1));
    CHECK(z.str() == "0");
}

TEST_CASE("division by zero signals") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("string round trip") {
    CHECK(Rational::parse("22/7").str() == "22/7");
    CHECK(Rational::parse("-3").str() == "-3");
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse(" 1/2 ").str() == "1/2");
    CHECK(Rational::parse("7/-3").str() == "-7/3");
    CHECK(Rational::parse("5/1").str() == "5");
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(pow(Rational(2), 10) == Rational(1024));
    CHECK(pow(Rational(2), -2) == Rational(1, 4));
    CHECK(pow(Rational(-1, 3), 3) == Rational(-1, 27));
    CHECK_THROWS_AS(pow(Rational(0), -1), DivisionByZeroError);
}

TEST_CASE("big values stay exact") {
    Rational acc(1);
    for (int i = 1; i <= 40; ++i) acc *= Rational(i, i + 1);
    CHECK(acc == Rational(1, 41));
}
