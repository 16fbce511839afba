#include "djkm/ratfunc.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace djkm {

RatFuncC RatFuncC::normalized(const PolyC& num, const PolyC& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    RatFuncC r;
    if (num.is_zero()) return r;
    PolyC g = gcd(num, den);
    r.num_ = num.divide_exact(g);
    r.den_ = den.divide_exact(g);
    Rational lead = r.den_.leading();
    r.num_ = r.num_ / lead;
    r.den_ = r.den_ / lead;
    return r;
}

RatFuncC RatFuncC::variable() { return RatFuncC(PolyC::variable()); }

const PolyC& RatFuncC::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial: " + str());
    return num_;
}

RatFuncC RatFuncC::operator-() const {
    RatFuncC r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFuncC operator+(const RatFuncC& a, const RatFuncC& b) {
    return RatFuncC::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncC operator-(const RatFuncC& a, const RatFuncC& b) {
    return RatFuncC::normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncC operator*(const RatFuncC& a, const RatFuncC& b) {
    return RatFuncC::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncC operator/(const RatFuncC& a, const RatFuncC& b) {
    return RatFuncC::normalized(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFuncC::eval(const Rational& c0) const {
    Rational d = den_.eval(c0);
    if (d.is_zero()) throw std::domain_error("pole at specialization point");
    return num_.eval(c0) / d;
}

namespace {

Rational poly_content(const PolyC& p) {
    // gcd of the (integer) coefficients; zero polynomial has content 0.
    Rational g;
    for (const Rational& a : p.coeffs()) g = gcd(g, a.sgn() < 0 ? -a : a);
    return g;
}

// Clears denominators: returns (A, B) with A/B == f, both integer-coefficient,
// joint content 1 and B's leading coefficient positive.
std::pair<PolyC, PolyC> integer_pair(const RatFuncC& f) {
    Rational scale(1);
    for (const Rational& a : f.num().coeffs()) scale = lcm(scale, a.denominator());
    for (const Rational& a : f.den().coeffs()) scale = lcm(scale, a.denominator());
    PolyC a = f.num() * scale;
    PolyC b = f.den() * scale;
    Rational g = gcd(poly_content(a), poly_content(b));
    if (!g.is_zero()) {
        a = a / g;
        b = b / g;
    }
    return {a, b};
}

std::string poly_int_str(const PolyC& p, bool star) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& a = p.coeff(i);
        if (a.is_zero()) continue;
        Rational mag = a.sgn() < 0 ? -a : a;
        if (first) {
            if (a.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (a.sgn() < 0 ? "-" : "+");
        }
        bool unit = mag.is_one();
        if (!unit || i == 0) os << mag.str();
        if (i > 0) {
            if (!unit && star) os << "*";
            os << "c";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

std::string RatFuncC::str() const {
    auto [a, b] = integer_pair(*this);
    if (b.is_one()) return poly_int_str(a, true);
    std::string den = b.is_constant() ? poly_int_str(b, true) : "(" + poly_int_str(b, true) + ")";
    return "(" + poly_int_str(a, true) + ")/" + den;
}

std::string RatFuncC::tex() const {
    auto [a, b] = integer_pair(*this);
    if (b.is_one()) return poly_int_str(a, false);
    return "\\frac{" + poly_int_str(a, false) + "}{" + poly_int_str(b, false) + "}";
}

namespace {

// Recursive-descent parser for the rendering grammar.
struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what +
                                    " in \"" + std::string(s) + "\"");
    }

    Rational integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return Rational::parse(s.substr(start, pos - start));
    }

    // posint '*' cpow | posint | cpow, with an optional leading sign handled
    // by the caller.
    PolyC term() {
        Rational coeff(1);
        int deg = 0;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = integer();
            if (accept('*')) {
                deg = cpow();
            }
        } else if (c == 'c') {
            deg = cpow();
        } else {
            fail("expected term");
        }
        return PolyC::monomial(deg, coeff);
    }

    int cpow() {
        expect('c');
        if (accept('^')) {
            Rational e = integer();
            long d = e.to_long();
            if (d < 0) fail("negative power of c");
            return static_cast<int>(d);
        }
        return 1;
    }

    PolyC poly() {
        PolyC p;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        PolyC t = term();
        p += neg ? -t : t;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                PolyC next = term();
                p += (c == '-') ? -next : next;
            } else {
                break;
            }
        }
        return p;
    }

    RatFuncC ratfunc() {
        if (peek() == '(') {
            expect('(');
            PolyC a = poly();
            expect(')');
            if (accept('/')) {
                PolyC b;
                if (peek() == '(') {
                    expect('(');
                    b = poly();
                    expect(')');
                } else {
                    b = PolyC(integer());
                }
                return RatFuncC::normalized(a, b);
            }
            return RatFuncC(a);
        }
        return RatFuncC(poly());
    }
};

}  // namespace

RatFuncC RatFuncC::parse(std::string_view text) {
    Parser p{text};
    RatFuncC r = p.ratfunc();
    if (p.peek() != '\0') p.fail("trailing input");
    return r;
}

bool render_negative(const RatFuncC& f) { return f.num().leading().sgn() < 0; }

std::string factor_str(const RatFuncC& f) {
    std::string text = f.str();
    int depth = 0;
    for (char ch : text) {
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        else if (depth == 0 && (ch == '+' || ch == '-'))
            return "(" + text + ")";
    }
    return text;
}

std::ostream& operator<<(std::ostream& os, const RatFuncC& f) { return os << f.str(); }

}  // namespace djkm
