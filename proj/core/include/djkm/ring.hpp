#ifndef DJKM_RING_HPP
#define DJKM_RING_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "djkm/ratfunc.hpp"

namespace djkm {

/// Curve data u^m = p(t) with p monic.  The default preset is the DJKM
/// curve m = 2, p(t) = t^4 - 2c t^2 + 1.
struct CurveSpec {
    int m = 2;
    std::vector<RatFuncC> p_coeffs;  // a_0 .. a_n ascending, a_n = 1

    /// m = 2, p(t) = t^4 - 2c t^2 + 1.
    static CurveSpec djkm();

    /// Validated general spec.  Throws std::invalid_argument unless m >= 1
    /// and the coefficient list is nonempty with leading coefficient 1.
    static CurveSpec general(int m, std::vector<RatFuncC> coeffs);

    int degree() const { return static_cast<int>(p_coeffs.size()) - 1; }

    /// True when sigma is available: m = 2 and p is a self-reciprocal
    /// quartic t^4 + a2 t^2 + 1 (the preset has a2 = -2c).
    bool is_djkm() const;
};

/// Element of R = C[t, t^-1, u] / (u^m - p(t)): a finite sum of
/// f_{i,s}(c) t^i u^s keyed by (i, s) with s >= 0.  Zero coefficients are
/// never stored, so equality is structural.
class RingElem {
public:
    using Key = std::pair<int, int>;  // (t exponent, u sheet)

    RingElem() = default;

    static RingElem constant(const RatFuncC& f);
    static RingElem t(int i = 1);
    static RingElem u();
    static RingElem monomial(int i, int s, const RatFuncC& coeff);

    const std::map<Key, RatFuncC>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of t^i u^s (zero when absent).
    const RatFuncC& coeff(int i, int s) const;

    /// Accumulates coeff onto the (i, s) term, dropping it if the sum is
    /// zero.  Throws std::invalid_argument on negative sheet.
    void add_term(int i, int s, const RatFuncC& coeff);

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(const RingElem& a, const RatFuncC& s);
    friend RingElem operator*(const RatFuncC& s, const RingElem& a) { return a * s; }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.terms_ == b.terms_;
    }

    /// Sum of monomials `f(c)*t^i*u^s` in (i, s)-lexicographic order, e.g.
    /// "2*c*t^-3*u + t^2".  Compound coefficients are parenthesized.
    std::string str() const;

    /// Inverse of str().  Accepts whitespace around operators and repeated
    /// factors (exponents accumulate).  Throws std::invalid_argument with
    /// an offset on malformed input.
    static RingElem parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const RingElem& a);

private:
    std::map<Key, RatFuncC> terms_;
};

/// Product in R, rewriting u^2 -> p(t) until every sheet is 0 or 1.
/// Throws std::domain_error("unsupported sheet count") unless spec.m = 2.
RingElem ring_mul(const RingElem& a, const RingElem& b, const CurveSpec& spec);

/// The involution t -> t^-1, u -> t^-2 u, i.e. t^i u^s -> t^{-i-2s} u^s.
/// Throws std::domain_error("sigma undefined for this curve") unless
/// spec.is_djkm().
RingElem sigma_ring(const RingElem& a, const CurveSpec& spec);

/// A_dt dt + A_du du, the pre-reduction shape of a differential.
struct DiffNormalForm {
    RingElem dt;
    RingElem du;

    DiffNormalForm& operator+=(const DiffNormalForm& o);
    friend DiffNormalForm operator+(DiffNormalForm a, const DiffNormalForm& b) {
        return a += b;
    }
    friend bool operator==(const DiffNormalForm& a, const DiffNormalForm& b) = default;

    std::string str() const;
};

/// Termwise exterior derivative d(t^i u^s) = i t^{i-1} u^s dt + s t^i u^{s-1} du.
DiffNormalForm ring_d(const RingElem& a);

}  // namespace djkm

#endif
