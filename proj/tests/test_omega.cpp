#include <doctest.h>

#include <stdexcept>

#include <djkm/omega.hpp>

#include "test_util.hpp"

using djkm::CurveSpec;
using djkm::DiffNormalForm;
using djkm::OmegaClass;
using djkm::RatFuncC;
using djkm::Rational;
using djkm::RingElem;

namespace {

const CurveSpec& spec() {
    static CurveSpec s = CurveSpec::djkm();
    return s;
}

RatFuncC rf(const char* text) { return RatFuncC::parse(text); }

OmegaClass om(int k, const char* coeff) { return OmegaClass::omega_m(k, rf(coeff)); }

// class of f dt
OmegaClass reduce_dt(const RingElem& f) {
    DiffNormalForm d;
    d.dt = f;
    return reduce(d, spec());
}

}  // namespace

TEST_SUITE("omega") {

TEST_CASE("basis accessors") {
    OmegaClass w = OmegaClass::omega_m(2, rf("(c)/3"));
    CHECK(w.lam_m(2) == rf("(c)/3"));
    CHECK(w.lam_m(1).is_zero());
    CHECK(w.lam0().is_zero());
    CHECK(OmegaClass::omega0().lam0().is_one());
    CHECK_THROWS_WITH(OmegaClass::omega_m(5), "basis index out of range");
    CHECK_THROWS_AS(OmegaClass::omega_m(0), std::invalid_argument);
}

TEST_CASE("str") {
    OmegaClass w = om(1, "(c)/2") + om(3, "(1)/2");
    CHECK(w.str() == "(c)/2*omega_m1 + (1)/2*omega_m3");
    CHECK(OmegaClass().str() == "0");
    CHECK((-OmegaClass::omega0()).str() == "-omega0");
}

TEST_CASE("reduction table for nonnegative k") {
    CHECK(reduce_u_dt(0, spec()) == OmegaClass::omega_m(4));
    CHECK(reduce_u_dt(1, spec()) == om(1, "(c)/2") + om(3, "(1)/2"));
    CHECK(reduce_u_dt(2, spec()) == om(2, "(1)/5") + om(4, "(4*c)/5"));
    CHECK(reduce_u_dt(3, spec()) == om(1, "(c^2)/2") + om(3, "(c)/2"));
    CHECK(reduce_u_dt(4, spec()) == om(2, "(8*c)/35") + om(4, "(32*c^2-5)/35"));
    CHECK(reduce_u_dt(5, spec()) == om(1, "(5*c^3-c)/8") + om(3, "(5*c^2-1)/8"));
}

TEST_CASE("reduction table for negative k") {
    for (int k = -4; k <= -1; ++k) CHECK(reduce_u_dt(k, spec()) == OmegaClass::omega_m(-k));
    CHECK(reduce_u_dt(-5, spec()) == om(1, "(1)/2") + om(3, "(c)/2"));
    CHECK(reduce_u_dt(-6, spec()) == om(2, "(1)/5") + om(4, "(4*c)/5"));
    CHECK(reduce_u_dt(-7, spec()) == om(1, "(c)/2") + om(3, "(c^2)/2"));
}

TEST_CASE("reduction requires the right curve") {
    CurveSpec cubic = CurveSpec::general(2, {RatFuncC(1), RatFuncC(), RatFuncC(), RatFuncC(1)});
    CHECK_THROWS_WITH(reduce_u_dt(0, cubic), "reduction requires the DJKM curve");

    // specialized c stays inside the family
    CurveSpec at3 = CurveSpec::general(
        2, {RatFuncC(1), RatFuncC(), RatFuncC(-6), RatFuncC(), RatFuncC(1)});
    CHECK(reduce_u_dt(1, at3) ==
          OmegaClass::omega_m(1, RatFuncC(Rational(3, 2))) +
              OmegaClass::omega_m(3, RatFuncC(Rational(1, 2))));
}

TEST_CASE("sheet zero dt classes") {
    CHECK(reduce_dt(RingElem::t(-1)) == OmegaClass::omega0());
    for (int a = -6; a <= 6; ++a) {
        if (a == -1) continue;
        CHECK(reduce_dt(RingElem::t(a)).is_zero());
    }
}

TEST_CASE("du elimination") {
    // u du = (1/2) p'(t) dt, an exact class
    DiffNormalForm d;
    d.du = RingElem::u();
    CHECK(reduce(d, spec()).is_zero());

    // t^i du = -i t^{i-1} u dt mod exact
    for (int i = -5; i <= 5; ++i) {
        DiffNormalForm e;
        e.du = RingElem::t(i);
        CHECK(reduce(e, spec()) == reduce_u_dt(i - 1, spec()) * RatFuncC(-i));
    }
}

TEST_CASE("exactness kernel") {
    for (int i = -10; i <= 10; ++i)
        for (int s = 0; s <= 1; ++s) {
            DiffNormalForm d = ring_d(RingElem::monomial(i, s, RatFuncC(1)));
            CHECK(reduce(d, spec()).is_zero());
        }
}

TEST_CASE("well-definedness on random products") {
    testutil::Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        RingElem f = rng.ring_elem(2, 5), g = rng.ring_elem(2, 5);
        DiffNormalForm df = ring_d(f), dg = ring_d(g);
        DiffNormalForm fdg_gdf;
        fdg_gdf.dt = ring_mul(f, dg.dt, spec()) + ring_mul(g, df.dt, spec());
        fdg_gdf.du = ring_mul(f, dg.du, spec()) + ring_mul(g, df.du, spec());
        CHECK(reduce(fdg_gdf, spec()).is_zero());
        CHECK(reduce(ring_d(ring_mul(f, g, spec())), spec()).is_zero());
    }
}

TEST_CASE("upward and downward reductions agree") {
    // The relation solved at the low end must reproduce the downward table:
    // 2(k+1) t^k u dt = -(14+2k) t^{k+4} u dt + 2c(8+2k) t^{k+2} u dt.
    RatFuncC c = RatFuncC::variable();
    for (int k = 0; k <= 8; ++k) {
        OmegaClass rhs = reduce_u_dt(k + 4, spec()) * RatFuncC(-(14 + 2 * k)) +
                         reduce_u_dt(k + 2, spec()) * (RatFuncC(2) * c * RatFuncC(8 + 2 * k));
        CHECK(reduce_u_dt(k, spec()) * RatFuncC(2 * (k + 1)) == rhs);
    }
}

TEST_CASE("cocycle") {
    CHECK(cocycle(RingElem::t(-1), RingElem::t(1), spec()) == OmegaClass::omega0());
    CHECK(cocycle(RingElem::u(), RingElem::u(), spec()).is_zero());
    CHECK(cocycle(RingElem::u(), RingElem::t(1), spec()) == OmegaClass::omega_m(4));

    testutil::Rng rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        RingElem f = rng.ring_elem(2, 5), g = rng.ring_elem(2, 5);
        CHECK(cocycle(f, g, spec()) == -cocycle(g, f, spec()));
    }
}

TEST_CASE("cocycle closed forms on monomials") {
    RatFuncC c = RatFuncC::variable();
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j) {
            OmegaClass tt = cocycle(RingElem::t(i), RingElem::t(j), spec());
            CHECK(tt == (i + j == 0 ? OmegaClass::omega0(RatFuncC(j)) : OmegaClass()));

            OmegaClass uu = cocycle(RingElem::monomial(i - 1, 1, RatFuncC(1)),
                                    RingElem::monomial(j - 1, 1, RatFuncC(1)), spec());
            RatFuncC z;
            if (i + j == -2) z += RatFuncC(j + 1);
            if (i + j == 0) z += RatFuncC(-2 * j) * c;
            if (i + j == 2) z += RatFuncC(j - 1);
            CHECK(uu == OmegaClass::omega0(z));
        }
}

TEST_CASE("sigma on the basis") {
    CHECK(sigma_omega(OmegaClass::omega0()) == -OmegaClass::omega0());
    CHECK(sigma_omega(OmegaClass::omega_m(1)) == -OmegaClass::omega_m(3));
    CHECK(sigma_omega(OmegaClass::omega_m(3)) == -OmegaClass::omega_m(1));
    CHECK(sigma_omega(OmegaClass::omega_m(2)) == -OmegaClass::omega_m(2));
    CHECK(sigma_omega(OmegaClass::omega_m(4)) == -OmegaClass::omega_m(4));

    for (int k = -8; k <= 8; ++k)
        CHECK(sigma_omega(reduce_u_dt(k, spec())) == -reduce_u_dt(-k - 4, spec()));
}

TEST_CASE("sigma equivariance of reduce") {
    for (int i = -8; i <= 8; ++i)
        for (int s = 0; s <= 1; ++s) {
            DiffNormalForm dt_form, du_form;
            dt_form.dt = RingElem::monomial(i, s, RatFuncC(1));
            du_form.du = RingElem::monomial(i, s, RatFuncC(1));
            CHECK(reduce(sigma_diff(dt_form, spec()), spec()) ==
                  sigma_omega(reduce(dt_form, spec())));
            CHECK(reduce(sigma_diff(du_form, spec()), spec()) ==
                  sigma_omega(reduce(du_form, spec())));
        }
}

TEST_CASE("lemma relation examples") {
    using djkm::LemmaTerm;

    djkm::LemmaRelation r = lemma_relation(2, spec(), -3);
    CHECK(r.lead == LemmaTerm{0, RatFuncC(6)});
    REQUIRE(r.tail.size() == 4);
    CHECK(r.tail[0] == LemmaTerm{-4, RatFuncC(-6)});
    CHECK(r.tail[1] == LemmaTerm{-3, RatFuncC()});
    CHECK(r.tail[2] == LemmaTerm{-2, RatFuncC()});
    CHECK(r.tail[3] == LemmaTerm{-1, RatFuncC()});

    // 10 t^2 u dt = 2 t^-2 u dt + 8c u dt after moving the tail across
    RatFuncC c = RatFuncC::variable();
    r = lemma_relation(2, spec(), -1);
    CHECK(r.lead == LemmaTerm{2, RatFuncC(10)});
    CHECK(r.tail[0] == LemmaTerm{-2, RatFuncC(-2)});
    CHECK(r.tail[2] == LemmaTerm{0, RatFuncC(-8) * c});
    CHECK(-r.tail[0].coefficient == RatFuncC(2));
    CHECK(-r.tail[2].coefficient == RatFuncC(8) * c);

    // m = 3 over p = t^2 + c t + 7
    CurveSpec m3 = CurveSpec::general(3, {RatFuncC(7), c, RatFuncC(1)});
    r = lemma_relation(3, m3, 0);
    CHECK(r.m == 3);
    CHECK(r.lead == LemmaTerm{1, RatFuncC(8)});
    REQUIRE(r.tail.size() == 2);
    CHECK(r.tail[0] == LemmaTerm{-1, RatFuncC()});
    CHECK(r.tail[1] == LemmaTerm{0, RatFuncC(4) * c});

    CHECK_THROWS_WITH(lemma_relation(0, spec(), 1), "sheet power must be positive");
}

TEST_CASE("lemma relation reduces to zero") {
    for (int i = -10; i <= 10; ++i) {
        djkm::LemmaRelation r = lemma_relation(2, spec(), i);
        RingElem sum = RingElem::monomial(r.lead.exponent, 1, r.lead.coefficient);
        for (const auto& term : r.tail)
            sum += RingElem::monomial(term.exponent, 1, term.coefficient);
        CHECK(reduce_dt(sum).is_zero());
    }
}

TEST_CASE("singular index is never divided") {
    // the reduction never walks through k = -3 from either side; spot-check
    // that the guarded branch would trip if it were reachable
    CHECK(reduce_u_dt(-3, spec()) == OmegaClass::omega_m(3));
}

}  // TEST_SUITE
