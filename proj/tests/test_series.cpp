#include <doctest.h>

#include <stdexcept>

#include <djkm/series.hpp>

#include "test_util.hpp"

using djkm::PowerSeriesZ;
using djkm::RatFuncC;
using djkm::Rational;

namespace {

PowerSeriesZ random_series(testutil::Rng& rng, int order, int low) {
    PowerSeriesZ s(order, low);
    for (int k = low; k < order; ++k)
        if (rng.range(0, 2)) s.set_coeff(k, RatFuncC(rng.rational()));
    return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("construction and coefficients") {
    PowerSeriesZ s(5);
    CHECK(s.is_zero());
    s.set_coeff(2, RatFuncC(3));
    s.add_coeff(2, RatFuncC(-1));
    CHECK(s.coeff(2) == RatFuncC(2));
    CHECK(s.coeff(4) == RatFuncC());
    CHECK(s.coeff(100) == RatFuncC());

    CHECK_THROWS_WITH(s.set_coeff(-1, RatFuncC(1)), "exponent below series low shift");
    CHECK_THROWS_AS(PowerSeriesZ(-2), std::domain_error);

    PowerSeriesZ lau(4, -2);
    lau.set_coeff(-2, RatFuncC(1));
    CHECK(lau.low_shift() == -2);
    CHECK(lau.coeff(-2) == RatFuncC(1));
}

TEST_CASE("multiplication truncates") {
    // (1 + z)^2 to order 3
    PowerSeriesZ a = PowerSeriesZ::one(3) + PowerSeriesZ::monomial(3, 1, RatFuncC(1));
    PowerSeriesZ sq = series_multiply(a, a, 3);
    CHECK(sq.coeff(0) == RatFuncC(1));
    CHECK(sq.coeff(1) == RatFuncC(2));
    CHECK(sq.coeff(2) == RatFuncC(1));

    // Laurent tails cancel: (z^-1 + 1) * z = 1 + z
    PowerSeriesZ lau(3, -1);
    lau.set_coeff(-1, RatFuncC(1));
    lau.set_coeff(0, RatFuncC(1));
    PowerSeriesZ z = PowerSeriesZ::monomial(3, 1, RatFuncC(1));
    PowerSeriesZ prod = series_multiply(lau, z, 3);
    CHECK(prod.coeff(0) == RatFuncC(1));
    CHECK(prod.coeff(1) == RatFuncC(1));
    CHECK(prod.coeff(2) == RatFuncC());
}

TEST_CASE("product against naive convolution") {
    testutil::Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        PowerSeriesZ a = random_series(rng, 8, -2);
        PowerSeriesZ b = random_series(rng, 8, -1);
        PowerSeriesZ ab = series_multiply(a, b, 8);
        for (int k = -3; k < 8; ++k) {
            RatFuncC want;
            for (int i = -2; i < 8; ++i) want += a.coeff(i) * b.coeff(k - i);
            CHECK(ab.coeff(k) == want);
        }
    }
}

TEST_CASE("integrate and differentiate") {
    PowerSeriesZ s(4);
    s.set_coeff(0, RatFuncC(1));
    s.set_coeff(3, RatFuncC(8));
    PowerSeriesZ is = s.integrate();
    CHECK(is.coeff(1) == RatFuncC(1));
    CHECK(is.coeff(4) == RatFuncC(2));
    CHECK(is.order() == 5);
    CHECK(is.differentiate().same_coeffs(s));

    PowerSeriesZ bad(3, -1);
    bad.set_coeff(-1, RatFuncC(1));
    CHECK_THROWS_WITH(bad.integrate(), "logarithmic term");

    // z^-2 integrates to -z^-1
    PowerSeriesZ tail(3, -2);
    tail.set_coeff(-2, RatFuncC(1));
    CHECK(tail.integrate().coeff(-1) == RatFuncC(-1));
}

TEST_CASE("differentiate then integrate on random series") {
    testutil::Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        PowerSeriesZ s = random_series(rng, 9, 1);  // no constant, no log obstruction
        CHECK(s.differentiate().integrate().same_coeffs(s));
        CHECK(s.integrate().differentiate().same_coeffs(s));
    }
}

TEST_CASE("require_nonnegative") {
    PowerSeriesZ ok(3, -2);
    ok.set_coeff(1, RatFuncC(5));
    CHECK(ok.require_nonnegative().low_shift() == 0);

    PowerSeriesZ bad(3, -2);
    bad.set_coeff(-2, RatFuncC(5));
    CHECK_THROWS_WITH(bad.require_nonnegative(), "negative exponent in final series");
}

TEST_CASE("same_coeffs compares the overlapping window") {
    PowerSeriesZ a(6), b(4);
    a.set_coeff(1, RatFuncC(2));
    b.set_coeff(1, RatFuncC(2));
    a.set_coeff(5, RatFuncC(9));  // beyond b's order
    CHECK(a.same_coeffs(b));
    b.set_coeff(2, RatFuncC(1));
    CHECK_FALSE(a.same_coeffs(b));
}

TEST_CASE("str") {
    PowerSeriesZ s(4, -1);
    s.set_coeff(-1, RatFuncC(Rational(1, 2)));
    s.set_coeff(2, RatFuncC(-3));
    CHECK(s.str() == "((1)/2)*z^-1 + (-3)*z^2 + O(z^4)");
}

}  // TEST_SUITE
