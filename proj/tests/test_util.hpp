#ifndef DJKM_TEST_UTIL_HPP
#define DJKM_TEST_UTIL_HPP

#include <cstdint>

#include <djkm/ring.hpp>

namespace testutil {

// splitmix64: deterministic across platforms, no <random> engine drift.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    djkm::Rational rational(long span = 9, long maxden = 6) {
        return djkm::Rational(range(-span, span), range(1, maxden));
    }

    djkm::Rational nonzero_rational(long span = 9, long maxden = 6) {
        djkm::Rational r;
        while (r.is_zero()) r = rational(span, maxden);
        return r;
    }

    djkm::PolyC poly(int maxdeg = 3, long span = 9) {
        djkm::PolyC p;
        int d = static_cast<int>(range(0, maxdeg));
        for (int k = 0; k <= d; ++k) p = p + djkm::PolyC::monomial(k, rational(span));
        return p;
    }

    djkm::PolyC nonzero_poly(int maxdeg = 3, long span = 9) {
        djkm::PolyC p;
        while (p.is_zero()) p = poly(maxdeg, span);
        return p;
    }

    djkm::RatFuncC ratfunc(int maxdeg = 3) {
        return djkm::RatFuncC::normalized(poly(maxdeg), nonzero_poly(maxdeg));
    }

    // A few monomials with small rational coefficients and |t-exponent|
    // bounded by emax; sheets 0 and 1 only.
    djkm::RingElem ring_elem(int terms = 3, int emax = 8) {
        djkm::RingElem r;
        for (int k = 0; k < terms; ++k)
            r.add_term(static_cast<int>(range(-emax, emax)), static_cast<int>(range(0, 1)),
                       djkm::RatFuncC(rational(9, 4)));
        return r;
    }
};

}  // namespace testutil

#endif
