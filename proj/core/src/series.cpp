#include "djkm/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace djkm {

namespace {
const RatFuncC kZero;
}

PowerSeriesZ::PowerSeriesZ(int order, int low_shift) : order_(order), low_shift_(low_shift) {
    if (order < 0) throw std::domain_error("negative truncation order");
}

PowerSeriesZ PowerSeriesZ::one(int order) {
    PowerSeriesZ s(order);
    s.set_coeff(0, RatFuncC(1));
    return s;
}

PowerSeriesZ PowerSeriesZ::monomial(int order, int k, const RatFuncC& coeff) {
    PowerSeriesZ s(order, std::min(k, 0));
    s.set_coeff(k, coeff);
    return s;
}

const RatFuncC& PowerSeriesZ::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? kZero : it->second;
}

void PowerSeriesZ::set_coeff(int k, const RatFuncC& value) {
    if (k >= order_) return;
    if (k < low_shift_) throw std::domain_error("exponent below series low shift");
    if (value.is_zero())
        terms_.erase(k);
    else
        terms_[k] = value;
}

void PowerSeriesZ::add_coeff(int k, const RatFuncC& value) {
    if (k >= order_ || value.is_zero()) return;
    if (k < low_shift_) throw std::domain_error("exponent below series low shift");
    auto [it, inserted] = terms_.try_emplace(k, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PowerSeriesZ PowerSeriesZ::operator-() const {
    PowerSeriesZ r(order_, low_shift_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

PowerSeriesZ operator+(const PowerSeriesZ& a, const PowerSeriesZ& b) {
    PowerSeriesZ r(std::min(a.order_, b.order_), std::min(a.low_shift_, b.low_shift_));
    for (const auto& [k, v] : a.terms_) r.add_coeff(k, v);
    for (const auto& [k, v] : b.terms_) r.add_coeff(k, v);
    return r;
}

PowerSeriesZ operator-(const PowerSeriesZ& a, const PowerSeriesZ& b) { return a + (-b); }

PowerSeriesZ operator*(const PowerSeriesZ& a, const RatFuncC& s) {
    PowerSeriesZ r(a.order_, a.low_shift_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, v * s);
    return r;
}

PowerSeriesZ series_multiply(const PowerSeriesZ& a, const PowerSeriesZ& b, int n) {
    PowerSeriesZ r(n, a.low_shift() + b.low_shift());
    for (const auto& [i, u] : a.terms()) {
        for (const auto& [j, v] : b.terms()) {
            if (i + j >= n) break;  // b is sorted by exponent
            r.add_coeff(i + j, u * v);
        }
    }
    return r;
}

PowerSeriesZ PowerSeriesZ::integrate() const {
    if (terms_.count(-1)) throw std::domain_error("logarithmic term");
    PowerSeriesZ r(order_ + 1, std::min(low_shift_ + 1, 0));
    for (const auto& [k, v] : terms_)
        r.add_coeff(k + 1, v * RatFuncC(Rational(1, k + 1)));
    return r;
}

PowerSeriesZ PowerSeriesZ::differentiate() const {
    PowerSeriesZ r(order_ > 0 ? order_ - 1 : 0, low_shift_ - 1);
    for (const auto& [k, v] : terms_) {
        if (k == 0) continue;
        r.add_coeff(k - 1, v * RatFuncC(Rational(k)));
    }
    return r;
}

PowerSeriesZ PowerSeriesZ::require_nonnegative() const {
    if (!terms_.empty() && terms_.begin()->first < 0)
        throw std::domain_error("negative exponent in final series");
    PowerSeriesZ r(order_, 0);
    r.terms_ = terms_;
    return r;
}

bool PowerSeriesZ::same_coeffs(const PowerSeriesZ& o) const {
    int lo = std::max(low_shift_, o.low_shift_);
    int hi = std::min(order_, o.order_);
    for (int k = lo; k < hi; ++k)
        if (!(coeff(k) == o.coeff(k))) return false;
    return true;
}

std::string PowerSeriesZ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")*z^" << k;
    }
    os << " + O(z^" << order_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PowerSeriesZ& s) { return os << s.str(); }

}  // namespace djkm
