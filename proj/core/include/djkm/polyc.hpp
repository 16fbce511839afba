#ifndef DJKM_POLYC_HPP
#define DJKM_POLYC_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "djkm/rational.hpp"

namespace djkm {

/// Univariate polynomial in the curve parameter c with rational coefficients.
/// Stored densely by ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector, degree -1).
class PolyC {
public:
    PolyC() = default;
    PolyC(const Rational& constant);
    PolyC(long constant) : PolyC(Rational(constant)) {}
    /// Coefficients by ascending degree.
    PolyC(std::initializer_list<Rational> ascending);
    explicit PolyC(std::vector<Rational> ascending);

    /// The polynomial c.
    static PolyC variable();
    static PolyC monomial(int degree, const Rational& coeff);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of c^i (zero outside the stored range).
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PolyC operator-() const;
    PolyC& operator+=(const PolyC& o);
    PolyC& operator-=(const PolyC& o);
    friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
    friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
    friend PolyC operator*(const PolyC& a, const PolyC& b);
    PolyC& operator*=(const PolyC& o) { return *this = *this * o; }
    friend PolyC operator*(const PolyC& a, const Rational& s);
    friend PolyC operator*(const Rational& s, const PolyC& a) { return a * s; }
    PolyC& operator*=(const Rational& s) { return *this = *this * s; }
    /// Division by a nonzero scalar.
    friend PolyC operator/(const PolyC& a, const Rational& s);

    friend bool operator==(const PolyC& a, const PolyC& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    void divmod(const PolyC& d, PolyC& q, PolyC& r) const;

    /// Quotient if d divides *this exactly, otherwise throws std::domain_error.
    PolyC divide_exact(const PolyC& d) const;
    bool divisible_by(const PolyC& d) const;

    PolyC derivative() const;
    Rational eval(const Rational& x) const;

    PolyC monic() const;
    /// Monic gcd (the zero polynomial if both inputs are zero).
    friend PolyC gcd(const PolyC& a, const PolyC& b);

    /// Debug rendering with rational coefficients, descending powers.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const PolyC& p);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace djkm

#endif
