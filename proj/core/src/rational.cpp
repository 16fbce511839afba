#include "djkm/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace djkm {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw std::domain_error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational Rational::parse(std::string_view text) {
    Rational r;
    std::string s(text);
    if (s.empty() || mpq_set_str(r.q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::invalid_argument("bad rational literal (zero denominator): " + s);
    mpq_canonicalize(r.q_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::numerator() const {
    Rational r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
}

Rational Rational::denominator() const {
    Rational r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
}

long Rational::to_long() const {
    if (!is_integer() || !mpz_fits_slong_p(mpq_numref(q_)))
        throw std::domain_error("rational does not fit in long");
    return mpz_get_si(mpq_numref(q_));
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

Rational gcd(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer())
        throw std::domain_error("gcd requires integer values");
    Rational r;
    mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
}

Rational lcm(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer())
        throw std::domain_error("lcm requires integer values");
    Rational r;
    mpz_lcm(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace djkm
