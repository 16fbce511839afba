#include "djkm/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace djkm {

CurveSpec CurveSpec::djkm() {
    RatFuncC c = RatFuncC::variable();
    return {2, {RatFuncC(1), RatFuncC(0), RatFuncC(-2) * c, RatFuncC(0), RatFuncC(1)}};
}

CurveSpec CurveSpec::general(int m, std::vector<RatFuncC> coeffs) {
    if (m < 1) throw std::invalid_argument("sheet power must be positive");
    if (coeffs.empty() || !coeffs.back().is_one())
        throw std::invalid_argument("curve polynomial must be monic");
    return {m, std::move(coeffs)};
}

bool CurveSpec::is_djkm() const {
    return m == 2 && degree() == 4 && p_coeffs[0].is_one() && p_coeffs[1].is_zero() &&
           p_coeffs[3].is_zero() && p_coeffs[4].is_one();
}

RingElem RingElem::constant(const RatFuncC& f) { return monomial(0, 0, f); }

RingElem RingElem::t(int i) { return monomial(i, 0, RatFuncC(1)); }

RingElem RingElem::u() { return monomial(0, 1, RatFuncC(1)); }

RingElem RingElem::monomial(int i, int s, const RatFuncC& coeff) {
    RingElem r;
    r.add_term(i, s, coeff);
    return r;
}

const RatFuncC& RingElem::coeff(int i, int s) const {
    static const RatFuncC kZero;
    auto it = terms_.find({i, s});
    return it == terms_.end() ? kZero : it->second;
}

void RingElem::add_term(int i, int s, const RatFuncC& coeff) {
    if (s < 0) throw std::invalid_argument("negative sheet");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, s}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RingElem RingElem::operator-() const {
    RingElem r;
    for (const auto& [key, f] : terms_) r.terms_.emplace(key, -f);
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    for (const auto& [key, f] : o.terms_) add_term(key.first, key.second, f);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    for (const auto& [key, f] : o.terms_) add_term(key.first, key.second, -f);
    return *this;
}

RingElem operator*(const RingElem& a, const RatFuncC& s) {
    RingElem r;
    for (const auto& [key, f] : a.terms_) r.add_term(key.first, key.second, f * s);
    return r;
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : terms_) {
        auto [i, s] = key;
        bool neg = render_negative(f);
        RatFuncC mag = neg ? -f : f;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (!mag.is_one() || (i == 0 && s == 0)) factors.push_back(factor_str(mag));
        if (i != 0) factors.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
        if (s == 1)
            factors.push_back("u");
        else if (s >= 2)
            factors.push_back("u^" + std::to_string(s));
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

namespace {

struct RingParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " +
                                    what + " in \"" + std::string(s) + "\"");
    }

    int exponent() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected exponent");
        return static_cast<int>(Rational::parse(s.substr(start, pos - start)).to_long());
    }

    // Maximal coefficient chunk: runs to the next top-level '*', '+', '-',
    // or end of input.  Parentheses nest.
    std::string coeff_chunk() {
        skip_ws();
        size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            char ch = s[pos];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if (depth == 0 && (ch == '*' || ch == '+' || ch == '-')) break;
            ++pos;
        }
        if (pos == start) fail("expected factor");
        size_t end = pos;
        while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
        return std::string(s.substr(start, end - start));
    }

    RingElem parse() {
        RingElem out;
        if (peek() == '\0') fail("empty ring element");
        bool first = true;
        while (peek() != '\0') {
            int sign = 1;
            char ch = peek();
            if (ch == '+' || ch == '-') {
                sign = ch == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            int i = 0, sh = 0;
            std::string coeff_text;
            while (true) {
                char f = peek();
                if (f == 't' || f == 'u') {
                    ++pos;
                    int e = 1;
                    if (peek() == '^') {
                        ++pos;
                        e = exponent();
                    }
                    if (f == 't')
                        i += e;
                    else if (e < 0)
                        fail("negative power of u");
                    else
                        sh += e;
                } else {
                    std::string chunk = coeff_chunk();
                    if (!coeff_text.empty()) coeff_text += "*";
                    coeff_text += chunk;
                }
                char next = peek();
                if (next == '*') {
                    ++pos;
                    continue;
                }
                if (next == '+' || next == '-' || next == '\0') break;
                fail("expected '*', '+', or '-'");
            }
            RatFuncC f = coeff_text.empty() ? RatFuncC(1) : RatFuncC::parse(coeff_text);
            out.add_term(i, sh, sign < 0 ? -f : f);
        }
        return out;
    }
};

}  // namespace

RingElem RingElem::parse(std::string_view text) {
    RingParser p{text};
    return p.parse();
}

std::ostream& operator<<(std::ostream& os, const RingElem& a) { return os << a.str(); }

RingElem ring_mul(const RingElem& a, const RingElem& b, const CurveSpec& spec) {
    if (spec.m != 2) throw std::domain_error("unsupported sheet count");
    RingElem out;
    // Rewrites u^s with s >= 2 through u^2 = p(t) before accumulating.
    auto emit = [&](auto&& self, int i, int s, const RatFuncC& f) -> void {
        if (s < 2) {
            out.add_term(i, s, f);
            return;
        }
        for (int j = 0; j <= spec.degree(); ++j) {
            const RatFuncC& aj = spec.p_coeffs[j];
            if (!aj.is_zero()) self(self, i + j, s - 2, f * aj);
        }
    };
    for (const auto& [ka, fa] : a.terms())
        for (const auto& [kb, fb] : b.terms())
            emit(emit, ka.first + kb.first, ka.second + kb.second, fa * fb);
    return out;
}

RingElem sigma_ring(const RingElem& a, const CurveSpec& spec) {
    if (!spec.is_djkm()) throw std::domain_error("sigma undefined for this curve");
    RingElem r;
    for (const auto& [key, f] : a.terms()) r.add_term(-key.first - 2 * key.second, key.second, f);
    return r;
}

DiffNormalForm& DiffNormalForm::operator+=(const DiffNormalForm& o) {
    dt += o.dt;
    du += o.du;
    return *this;
}

std::string DiffNormalForm::str() const {
    return "(" + dt.str() + ") dt + (" + du.str() + ") du";
}

DiffNormalForm ring_d(const RingElem& a) {
    DiffNormalForm d;
    for (const auto& [key, f] : a.terms()) {
        auto [i, s] = key;
        if (i != 0) d.dt.add_term(i - 1, s, f * RatFuncC(i));
        if (s != 0) d.du.add_term(i, s - 1, f * RatFuncC(s));
    }
    return d;
}

}  // namespace djkm
