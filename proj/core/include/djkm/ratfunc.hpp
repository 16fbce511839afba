#ifndef DJKM_RATFUNC_HPP
#define DJKM_RATFUNC_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "djkm/polyc.hpp"

namespace djkm {

/// Reduced rational function in c over Q.  Canonical form: gcd(num, den) = 1
/// and den monic, so equality is a structural comparison.  Zero is 0/1.
class RatFuncC {
public:
    RatFuncC() : den_(Rational(1)) {}
    RatFuncC(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RatFuncC(long constant) : RatFuncC(Rational(constant)) {}
    RatFuncC(const PolyC& p) : num_(p), den_(Rational(1)) {}

    /// Canonical num/den.  Throws std::domain_error("division by zero
    /// polynomial") when den is zero.
    static RatFuncC normalized(const PolyC& num, const PolyC& den);

    /// The rational function c.
    static RatFuncC variable();

    const PolyC& num() const { return num_; }
    const PolyC& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Numerator when den = 1; throws otherwise.
    const PolyC& as_polynomial() const;

    RatFuncC operator-() const;
    friend RatFuncC operator+(const RatFuncC& a, const RatFuncC& b);
    friend RatFuncC operator-(const RatFuncC& a, const RatFuncC& b);
    friend RatFuncC operator*(const RatFuncC& a, const RatFuncC& b);
    friend RatFuncC operator/(const RatFuncC& a, const RatFuncC& b);
    RatFuncC& operator+=(const RatFuncC& o) { return *this = *this + o; }
    RatFuncC& operator-=(const RatFuncC& o) { return *this = *this - o; }
    RatFuncC& operator*=(const RatFuncC& o) { return *this = *this * o; }
    RatFuncC& operator/=(const RatFuncC& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncC& a, const RatFuncC& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact evaluation at c = c0.  Throws std::domain_error("pole at
    /// specialization point") when the denominator vanishes there.
    Rational eval(const Rational& c0) const;

    /// Fixed rendering grammar: integer coefficients, descending powers of c,
    /// parenthesized numerator over denominator.  Examples: "32*c^2-5",
    /// "(c)/2", "(32*c^2-5)/35", "(1)/(c^2-1)".
    std::string str() const;
    /// Parses the rendering grammar back.  Throws std::invalid_argument.
    static RatFuncC parse(std::string_view text);

    /// LaTeX rendering, \frac{..}{..} when a denominator is present.
    std::string tex() const;

    friend std::ostream& operator<<(std::ostream& os, const RatFuncC& f);

private:
    PolyC num_;
    PolyC den_;
};

/// Sign convention used by renderers: negative iff the leading numerator
/// coefficient is negative.
bool render_negative(const RatFuncC& f);

/// str(), parenthesized when the rendering would be ambiguous inside a
/// product: "(c^2+1)" but "2*c" and "(32*c^2-5)/35" unchanged.
std::string factor_str(const RatFuncC& f);

}  // namespace djkm

#endif
