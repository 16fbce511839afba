#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include <djkm/rational.hpp>

#include "test_util.hpp"

using djkm::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(5, -10) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational());
    CHECK(Rational(7, 2).numerator() == 7);
    CHECK(Rational(7, 2).denominator() == 2);
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("0") == Rational());
    CHECK_THROWS_WITH(Rational::parse("seven"), "bad rational literal: seven");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("str") {
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational().str() == "0");
    std::ostringstream os;
    os << Rational(1, 3);
    CHECK(os.str() == "1/3");
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_WITH(a / Rational(), "division by zero");
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(3).sgn() == 1);
    CHECK(Rational(-1, 5).sgn() == -1);
    CHECK(Rational().sgn() == 0);
}

TEST_CASE("to_long") {
    CHECK(Rational(-42).to_long() == -42);
    CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("integer gcd and lcm") {
    CHECK(gcd(Rational(12), Rational(-18)) == Rational(6));
    CHECK(lcm(Rational(4), Rational(6)) == Rational(12));
    CHECK_THROWS_WITH(gcd(Rational(1, 2), Rational(3)), "gcd requires integer values");
}

TEST_CASE("field axioms on random values") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = rng.rational(50, 40);
        Rational b = rng.rational(50, 40);
        Rational c = rng.rational(50, 40);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + b) * c == a * c + b * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

}  // TEST_SUITE
