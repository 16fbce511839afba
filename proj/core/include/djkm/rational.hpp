#ifndef DJKM_RATIONAL_HPP
#define DJKM_RATIONAL_HPP

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace djkm {

/// Arbitrary-precision rational number, always held in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.  Backed by GMP's mpq layer.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "a" or "a/b" in base 10.  Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rational parse(std::string_view text);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }
    int sgn() const { return mpq_sgn(q_); }

    /// Numerator (signed) and denominator (positive) as integer-valued rationals.
    Rational numerator() const;
    Rational denominator() const;

    /// Truncating conversion; only valid for integer values that fit in long.
    long to_long() const;

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    /// gcd / lcm of integer-valued rationals (used for clearing denominators).
    friend Rational gcd(const Rational& a, const Rational& b);
    friend Rational lcm(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_t q_;
};

}  // namespace djkm

#endif
