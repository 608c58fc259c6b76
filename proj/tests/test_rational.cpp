#include <catch2/catch_amalgamated.hpp>

#include "lenard/rational.hpp"

using lenard::Rational;

TEST_CASE("rational canonical form", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(2, -4).numerator() == -1);
    CHECK(Rational(0).denominator() == 1);
}

TEST_CASE("rational arithmetic", "[rational]") {
    const Rational a(1, 3), b(2, 3);
    CHECK((a + b).is_one());
    CHECK((a - a).is_zero());
    CHECK(a * Rational(3) == Rational(1));
    CHECK(a / b == Rational(1, 2));
    CHECK((-a).sign() == -1);
    CHECK(a.inverse() == Rational(3));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK_THROWS_AS(a / Rational(0), lenard::division_by_zero);
    CHECK_THROWS_AS(Rational(1, 0), lenard::division_by_zero);
}

TEST_CASE("rational printing and reading", "[rational]") {
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("12345678901234567890").denominator() == 1);
    // big values round-trip exactly
    const Rational big = Rational::from_string("123456789012345678901/9876543210987654321");
    CHECK(Rational::from_string(big.str()) == big);
}

TEST_CASE("rational ordering", "[rational]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(5, 7) >= Rational(5, 7));
}
