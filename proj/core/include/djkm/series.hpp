#ifndef DJKM_SERIES_HPP
#define DJKM_SERIES_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "djkm/ratfunc.hpp"

namespace djkm {

/// Truncated formal power series in z with RatFuncC coefficients.  Exponents
/// live in [low_shift, order); order is the exclusive truncation, low_shift
/// is 0 for honest power series and may be negative for intermediate
/// integrands.  Stored zeros are dropped.
class PowerSeriesZ {
public:
    explicit PowerSeriesZ(int order, int low_shift = 0);

    static PowerSeriesZ one(int order);
    static PowerSeriesZ monomial(int order, int k, const RatFuncC& coeff);

    int order() const { return order_; }
    int low_shift() const { return low_shift_; }

    const RatFuncC& coeff(int k) const;
    void set_coeff(int k, const RatFuncC& value);
    void add_coeff(int k, const RatFuncC& value);
    const std::map<int, RatFuncC>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    PowerSeriesZ operator-() const;
    friend PowerSeriesZ operator+(const PowerSeriesZ& a, const PowerSeriesZ& b);
    friend PowerSeriesZ operator-(const PowerSeriesZ& a, const PowerSeriesZ& b);
    PowerSeriesZ& operator+=(const PowerSeriesZ& o) { return *this = *this + o; }
    PowerSeriesZ& operator-=(const PowerSeriesZ& o) { return *this = *this - o; }
    friend PowerSeriesZ operator*(const PowerSeriesZ& a, const RatFuncC& s);

    /// Termwise z^k -> z^{k+1}/(k+1), zero constant of integration.  A stored
    /// z^{-1} term throws std::domain_error("logarithmic term").
    PowerSeriesZ integrate() const;

    /// Formal d/dz; result order drops by one.
    PowerSeriesZ differentiate() const;

    /// Asserts every stored exponent is >= 0 and returns a copy with
    /// low_shift = 0.  Throws std::domain_error otherwise.
    PowerSeriesZ require_nonnegative() const;

    /// Coefficients equal on [max(low), min(order)); truncation bounds may differ.
    bool same_coeffs(const PowerSeriesZ& o) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const PowerSeriesZ& s);

private:
    int order_;
    int low_shift_;
    std::map<int, RatFuncC> terms_;
};

/// Cauchy product truncated at order N; low shifts add.
PowerSeriesZ series_multiply(const PowerSeriesZ& a, const PowerSeriesZ& b, int n);

}  // namespace djkm

#endif
