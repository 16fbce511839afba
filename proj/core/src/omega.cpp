#include "djkm/omega.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace djkm {

OmegaClass OmegaClass::omega0(const RatFuncC& coeff) {
    OmegaClass w;
    w.coords_[0] = coeff;
    return w;
}

OmegaClass OmegaClass::omega_m(int k, const RatFuncC& coeff) {
    if (k < 1 || k > 4) throw std::invalid_argument("basis index out of range");
    OmegaClass w;
    w.coords_[k] = coeff;
    return w;
}

const RatFuncC& OmegaClass::lam_m(int k) const {
    if (k < 1 || k > 4) throw std::invalid_argument("basis index out of range");
    return coords_[k];
}

bool OmegaClass::is_zero() const {
    for (const RatFuncC& f : coords_)
        if (!f.is_zero()) return false;
    return true;
}

OmegaClass OmegaClass::operator-() const {
    OmegaClass w;
    for (int i = 0; i < 5; ++i) w.coords_[i] = -coords_[i];
    return w;
}

OmegaClass& OmegaClass::operator+=(const OmegaClass& o) {
    for (int i = 0; i < 5; ++i) coords_[i] += o.coords_[i];
    return *this;
}

OmegaClass& OmegaClass::operator-=(const OmegaClass& o) {
    for (int i = 0; i < 5; ++i) coords_[i] -= o.coords_[i];
    return *this;
}

OmegaClass operator*(const OmegaClass& a, const RatFuncC& s) {
    OmegaClass w;
    for (int i = 0; i < 5; ++i) w.coords_[i] = a.coords_[i] * s;
    return w;
}

std::string OmegaClass::str() const {
    static const char* names[5] = {"omega0", "omega_m1", "omega_m2", "omega_m3", "omega_m4"};
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        const RatFuncC& f = coords_[i];
        if (f.is_zero()) continue;
        bool neg = render_negative(f);
        RatFuncC mag = neg ? -f : f;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (!mag.is_one()) os << factor_str(mag) << "*";
        os << names[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const OmegaClass& w) { return os << w.str(); }

namespace {

void require_djkm(const CurveSpec& spec) {
    if (!spec.is_djkm()) throw std::domain_error("reduction requires the DJKM curve");
}

}  // namespace

OmegaClass reduce_u_dt(int k, const CurveSpec& spec) {
    require_djkm(spec);
    std::map<int, OmegaClass> table;
    for (int j = -4; j <= -1; ++j) table[j] = OmegaClass::omega_m(-j);
    const RatFuncC& a2 = spec.p_coeffs[2];
    if (k >= 0) {
        for (int j = 0; j <= k; ++j) {
            int divisor = 6 + 2 * j;
            if (divisor == 0) throw std::logic_error("reduction hit the singular index");
            table[j] = (table[j - 4] * RatFuncC(-2 * (j - 3)) +
                        table[j - 2] * (a2 * RatFuncC(-2 * j))) *
                       RatFuncC(Rational(1, divisor));
        }
    } else if (k <= -5) {
        for (int j = -5; j >= k; --j) {
            int divisor = 2 * (j + 1);
            if (divisor == 0) throw std::logic_error("reduction hit the singular index");
            table[j] = (table[j + 4] * RatFuncC(-(14 + 2 * j)) +
                        table[j + 2] * (a2 * RatFuncC(-(8 + 2 * j)))) *
                       RatFuncC(Rational(1, divisor));
        }
    }
    return table[k];
}

OmegaClass reduce(const DiffNormalForm& d, const CurveSpec& spec) {
    require_djkm(spec);
    const RingElem unit = RingElem::constant(RatFuncC(1));
    RingElem dt = ring_mul(d.dt, unit, spec);
    RingElem du = ring_mul(d.du, unit, spec);
    for (const auto& [key, f] : du.terms()) {
        auto [i, s] = key;
        if (s == 1) {
            // f t^i u du = f t^i (1/2) p'(t) dt
            for (int j = 1; j <= spec.degree(); ++j) {
                const RatFuncC& aj = spec.p_coeffs[j];
                if (!aj.is_zero()) dt.add_term(i + j - 1, 0, f * aj * RatFuncC(Rational(j, 2)));
            }
        } else {
            // f t^i du = -i f t^{i-1} u dt modulo d(f t^i u)
            dt.add_term(i - 1, 1, f * RatFuncC(-i));
        }
    }
    OmegaClass out;
    for (const auto& [key, f] : dt.terms()) {
        auto [i, s] = key;
        if (s == 0) {
            if (i == -1) out += OmegaClass::omega0(f);
        } else {
            out += f * reduce_u_dt(i, spec);
        }
    }
    return out;
}

OmegaClass cocycle(const RingElem& f, const RingElem& g, const CurveSpec& spec) {
    DiffNormalForm dg = ring_d(g);
    return reduce({ring_mul(f, dg.dt, spec), ring_mul(f, dg.du, spec)}, spec);
}

OmegaClass sigma_omega(const OmegaClass& w) {
    const auto& in = w.coords();
    OmegaClass out;
    out -= OmegaClass::omega0(in[0]);
    out -= OmegaClass::omega_m(3, in[1]);
    out -= OmegaClass::omega_m(2, in[2]);
    out -= OmegaClass::omega_m(1, in[3]);
    out -= OmegaClass::omega_m(4, in[4]);
    return out;
}

DiffNormalForm sigma_diff(const DiffNormalForm& d, const CurveSpec& spec) {
    RingElem sa = sigma_ring(d.dt, spec);
    RingElem sb = sigma_ring(d.du, spec);
    DiffNormalForm out;
    out.dt = ring_mul(sa, RingElem::monomial(-2, 0, RatFuncC(-1)), spec);
    out.dt += ring_mul(sb, RingElem::monomial(-3, 1, RatFuncC(-2)), spec);
    out.du = ring_mul(sb, RingElem::monomial(-2, 0, RatFuncC(1)), spec);
    return out;
}

LemmaRelation lemma_relation(int m, const CurveSpec& spec, int i) {
    if (m < 1) throw std::invalid_argument("sheet power must be positive");
    int n = spec.degree();
    LemmaRelation rel;
    rel.m = m;
    rel.i = i;
    rel.lead = {n + i - 1, RatFuncC((m + 1) * n + i * m)};
    for (int j = 0; j < n; ++j)
        rel.tail.push_back({i + j - 1, spec.p_coeffs[j] * RatFuncC((m + 1) * j + i * m)});
    return rel;
}

}  // namespace djkm
