#include <doctest.h>

#include <stdexcept>
#include <string>

#include <djkm/ratfunc.hpp>

#include "test_util.hpp"

using djkm::PolyC;
using djkm::RatFuncC;
using djkm::Rational;

TEST_SUITE("ratfunc") {

TEST_CASE("normalization") {
    PolyC c = PolyC::variable();
    RatFuncC f = RatFuncC::normalized(PolyC{-1, 0, 1}, c - PolyC(1));
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == c + PolyC(1));

    RatFuncC g = RatFuncC::normalized(PolyC(1), PolyC(2) * c);
    CHECK(g.den() == c);
    CHECK(g.num() == PolyC(Rational(1, 2)));

    CHECK_THROWS_WITH(RatFuncC::normalized(c, PolyC()), "division by zero polynomial");
    CHECK_THROWS_AS(RatFuncC::normalized(PolyC(1), c).as_polynomial(), std::domain_error);
    CHECK(RatFuncC::normalized(c, c).is_one());
}

TEST_CASE("arithmetic") {
    RatFuncC c = RatFuncC::variable();
    RatFuncC one(1);
    RatFuncC f = one / (c - one);
    RatFuncC g = one / (c + one);
    CHECK(f - g == RatFuncC(2) / (c * c - one));
    CHECK(f * g * (c * c - one) == one);
    CHECK(f + (-f) == RatFuncC());
    CHECK_THROWS_AS(f / RatFuncC(), std::domain_error);
}

TEST_CASE("str renderings") {
    RatFuncC c = RatFuncC::variable();
    CHECK((c / RatFuncC(2)).str() == "(c)/2");
    CHECK((c * c / RatFuncC(2)).str() == "(c^2)/2");
    CHECK(((RatFuncC(32) * c * c - RatFuncC(5)) / RatFuncC(35)).str() == "(32*c^2-5)/35");
    CHECK((RatFuncC(1) / RatFuncC(2)).str() == "(1)/2");
    CHECK((RatFuncC(1) / (c * c - RatFuncC(1))).str() == "(1)/(c^2-1)");
    CHECK((RatFuncC(2) * c).str() == "2*c");
    CHECK((-c).str() == "-c");
    CHECK(RatFuncC().str() == "0");
}

TEST_CASE("tex") {
    RatFuncC c = RatFuncC::variable();
    CHECK((c / RatFuncC(2)).tex() == "\\frac{c}{2}");
    CHECK(((RatFuncC(32) * c * c - RatFuncC(5)) / RatFuncC(35)).tex() == "\\frac{32c^2-5}{35}");
    CHECK((RatFuncC(2) * c).tex() == "2c");
}

TEST_CASE("parse") {
    RatFuncC c = RatFuncC::variable();
    CHECK(RatFuncC::parse("(c)/2") == c / RatFuncC(2));
    CHECK(RatFuncC::parse("(32*c^2-5)/35") == (RatFuncC(32) * c * c - RatFuncC(5)) / RatFuncC(35));
    CHECK(RatFuncC::parse("(1)/(c^2-1)") == RatFuncC(1) / (c * c - RatFuncC(1)));
    CHECK(RatFuncC::parse("2*c") == RatFuncC(2) * c);
    CHECK(RatFuncC::parse("-c") == -c);
    CHECK(RatFuncC::parse("0") == RatFuncC());
    CHECK_THROWS_AS(RatFuncC::parse("1/2"), std::invalid_argument);
    CHECK_THROWS_AS(RatFuncC::parse("(c"), std::invalid_argument);
    CHECK_THROWS_AS(RatFuncC::parse(""), std::invalid_argument);
}

TEST_CASE("parse inverts str on random functions") {
    testutil::Rng rng(37);
    for (int trial = 0; trial < 150; ++trial) {
        RatFuncC f = rng.ratfunc(4);
        CHECK(RatFuncC::parse(f.str()) == f);
    }
}

TEST_CASE("factor_str parenthesizes sums only") {
    RatFuncC c = RatFuncC::variable();
    CHECK(djkm::factor_str(c / RatFuncC(2)) == "(c)/2");
    CHECK(djkm::factor_str(c + RatFuncC(1)) == "(c+1)");
    CHECK(djkm::factor_str(RatFuncC(2) * c) == "2*c");
    CHECK(djkm::factor_str(RatFuncC(5)) == "5");
}

TEST_CASE("eval") {
    RatFuncC c = RatFuncC::variable();
    RatFuncC f = (c * c - RatFuncC(1)) / (RatFuncC(2) * c);
    CHECK(f.eval(Rational(3)) == Rational(4, 3));
    CHECK(f.eval(Rational(-1, 2)) == Rational(3, 4));
    CHECK_THROWS_WITH(f.eval(Rational()), "pole at specialization point");
}

TEST_CASE("render_negative") {
    RatFuncC c = RatFuncC::variable();
    CHECK(djkm::render_negative(-c));
    CHECK(djkm::render_negative((RatFuncC(-1) * c * c + RatFuncC(5)) / RatFuncC(3)));
    CHECK_FALSE(djkm::render_negative(c - RatFuncC(100)));
    CHECK_FALSE(djkm::render_negative(RatFuncC()));
}

}  // TEST_SUITE
