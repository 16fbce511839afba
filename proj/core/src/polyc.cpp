#include "djkm/polyc.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace djkm {

namespace {
const Rational kZero;
}

PolyC::PolyC(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

PolyC::PolyC(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

PolyC::PolyC(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

PolyC PolyC::variable() { return monomial(1, Rational(1)); }

PolyC PolyC::monomial(int degree, const Rational& coeff) {
    PolyC p;
    if (degree < 0) throw std::domain_error("negative degree");
    if (coeff.is_zero()) return p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational());
    p.coeffs_.back() = coeff;
    return p;
}

void PolyC::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& PolyC::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& PolyC::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

PolyC PolyC::operator-() const {
    PolyC r(*this);
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

PolyC& PolyC::operator+=(const PolyC& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyC& PolyC::operator-=(const PolyC& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyC operator*(const PolyC& a, const PolyC& b) {
    PolyC r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

PolyC operator*(const PolyC& a, const Rational& s) {
    PolyC r;
    if (s.is_zero()) return r;
    r.coeffs_ = a.coeffs_;
    for (auto& x : r.coeffs_) x *= s;
    return r;
}

PolyC operator/(const PolyC& a, const Rational& s) {
    if (s.is_zero()) throw std::domain_error("division by zero");
    PolyC r = a;
    for (auto& x : r.coeffs_) x /= s;
    return r;
}

void PolyC::divmod(const PolyC& d, PolyC& q, PolyC& r) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    q = PolyC();
    r = *this;
    int dd = d.degree();
    const Rational& lead = d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        int shift = r.degree() - dd;
        Rational factor = r.leading() / lead;
        q += PolyC::monomial(shift, factor);
        r -= PolyC::monomial(shift, factor) * d;
    }
}

PolyC PolyC::divide_exact(const PolyC& d) const {
    PolyC q, r;
    divmod(d, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool PolyC::divisible_by(const PolyC& d) const {
    PolyC q, r;
    divmod(d, q, r);
    return r.is_zero();
}

PolyC PolyC::derivative() const {
    PolyC r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    r.trim();
    return r;
}

Rational PolyC::eval(const Rational& x) const {
    Rational acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

PolyC PolyC::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

PolyC gcd(const PolyC& a, const PolyC& b) {
    PolyC x = a, y = b;
    while (!y.is_zero()) {
        PolyC q, r;
        x.divmod(y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string PolyC::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = coeff(i);
        if (a.is_zero()) continue;
        Rational mag = a.sgn() < 0 ? -a : a;
        if (first) {
            if (a.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (a.sgn() < 0 ? " - " : " + ");
        }
        bool unit = mag.is_one();
        if (!unit || i == 0) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "c";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyC& p) { return os << p.str(); }

}  // namespace djkm
