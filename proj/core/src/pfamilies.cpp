#include "djkm/pfamilies.hpp"

#include <stdexcept>

namespace djkm {

GegenbauerTable gegenbauer(const Rational& lambda, int nmax) {
    if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
    GegenbauerTable table{lambda, {}};
    table.entries.reserve(nmax + 1);
    const PolyC c = PolyC::variable();
    table.entries.push_back(PolyC(1));
    if (nmax >= 1) table.entries.push_back(c * (Rational(2) * lambda));
    for (int n = 2; n <= nmax; ++n) {
        PolyC next = c * table.entries[n - 1] * (Rational(2) * (Rational(n - 1) + lambda)) -
                     table.entries[n - 2] * (Rational(n - 2) + Rational(2) * lambda);
        table.entries.push_back(next / Rational(n));
    }
    return table;
}

namespace {

void check_family(int family) {
    if (family < -4 || family > -1) throw std::invalid_argument("unknown family");
}

std::map<int, RatFuncC> run_recursion(const std::array<RatFuncC, 4>& initials, int kmax) {
    std::map<int, RatFuncC> entries;
    for (int j = 0; j < 4; ++j) entries[j - 4] = initials[j];
    const RatFuncC c = RatFuncC::variable();
    for (int k = 0; k <= kmax; ++k)
        entries[k] = (c * entries[k - 2] * RatFuncC(4 * k) -
                      entries[k - 4] * RatFuncC(2 * (k - 3))) *
                     RatFuncC(Rational(1, 6 + 2 * k));
    return entries;
}

}  // namespace

PFamilyTable pfamily_recursion(int family, int kmax) {
    check_family(family);
    if (kmax < -4) throw std::invalid_argument("kmax must be at least -4");
    std::array<RatFuncC, 4> initials;
    initials[family + 4] = RatFuncC(1);
    return {family, run_recursion(initials, kmax)};
}

namespace {

// sum_n Q_n^(-1/2)(c) z^{2n+1}, the expansion of z sqrt(1-2cz^2+z^4).
PowerSeriesZ sqrt_series(int order) {
    GegenbauerTable q = gegenbauer(Rational(-1, 2), order / 2);
    PowerSeriesZ s(order);
    for (int n = 0; 2 * n + 1 < order; ++n) s.set_coeff(2 * n + 1, RatFuncC(q.entries[n]));
    return s;
}

// sum_n Q_n^(3/2)(c) z^{2n}, the expansion of (1-2cz^2+z^4)^(-3/2).
PowerSeriesZ p32_series(int order) {
    GegenbauerTable q = gegenbauer(Rational(3, 2), order / 2);
    PowerSeriesZ s(order);
    for (int n = 0; 2 * n < order; ++n) s.set_coeff(2 * n, RatFuncC(q.entries[n]));
    return s;
}

// Exact coefficientwise division by a polynomial in c; throws if any
// coefficient fails to divide.
PowerSeriesZ divide_exact_coeffs(const PowerSeriesZ& s, const PolyC& den) {
    PowerSeriesZ out(s.order(), s.low_shift());
    for (const auto& [k, f] : s.terms())
        out.set_coeff(k, RatFuncC(f.as_polynomial().divide_exact(den)));
    return out;
}

}  // namespace

PowerSeriesZ pfamily_series(int family, int N) {
    check_family(family);
    if (N < 1) throw std::invalid_argument("N must be positive");
    const RatFuncC c = RatFuncC::variable();
    const PolyC c2m1 = PolyC{Rational(-1), Rational(0), Rational(1)};  // c^2 - 1
    switch (family) {
        case -4: {
            // z sqrt(..) times the integral of (4c - z^-2)(1-2cz^2+z^4)^(-3/2)
            PowerSeriesZ p32 = p32_series(N + 2);
            PowerSeriesZ g(N + 2, -2);
            for (const auto& [k, f] : p32.terms()) {
                g.add_coeff(k, f * (c * RatFuncC(4)));
                g.add_coeff(k - 2, -f);
            }
            return series_multiply(sqrt_series(N + 2), g.integrate(), N).require_nonnegative();
        }
        case -2: {
            PowerSeriesZ gi = p32_series(N + 2).integrate();
            return series_multiply(sqrt_series(N + 2), gi, N);
        }
        case -1: {
            PowerSeriesZ num = -sqrt_series(N) * c;
            num.add_coeff(1, c);
            num.add_coeff(3, RatFuncC(-1));
            return divide_exact_coeffs(num, c2m1);
        }
        case -3: {
            PowerSeriesZ num = -sqrt_series(N);
            num.add_coeff(1, c * c);
            num.add_coeff(3, -c);
            return divide_exact_coeffs(num, c2m1);
        }
    }
    throw std::logic_error("unreachable");
}

FundeCheck check_funde(const std::array<Rational, 4>& initials, int N) {
    if (N < 8) throw std::invalid_argument("N must be at least 8");
    std::array<RatFuncC, 4> init;
    for (int j = 0; j < 4; ++j) init[j] = RatFuncC(initials[j]);
    std::map<int, RatFuncC> table = run_recursion(init, N - 4);

    PowerSeriesZ P(N + 1);
    for (const auto& [k, f] : table) P.set_coeff(k + 4, f);
    PowerSeriesZ dP = P.differentiate();

    const RatFuncC c = RatFuncC::variable();
    const int M = N - 4;
    PowerSeriesZ q1(6);  // z^5 - 2cz^3 + z
    q1.set_coeff(5, RatFuncC(1));
    q1.set_coeff(3, c * RatFuncC(-2));
    q1.set_coeff(1, RatFuncC(1));
    PowerSeriesZ q2(5);  // 3z^4 - 4cz^2 + 1
    q2.set_coeff(4, RatFuncC(3));
    q2.set_coeff(2, c * RatFuncC(-4));
    q2.set_coeff(0, RatFuncC(1));
    PowerSeriesZ lhs = series_multiply(q1, dP, M) - series_multiply(q2, P, M);

    PowerSeriesZ rhs(M);
    rhs.set_coeff(3, (init[3] + c * init[1]) * RatFuncC(2));
    rhs.set_coeff(2, init[2] + c * init[0] * RatFuncC(4));
    rhs.set_coeff(0, -init[0]);

    for (int j = 0; j < M; ++j)
        if (!(lhs.coeff(j) == rhs.coeff(j))) return {false, j};
    return {true, -1};
}

OdeReport check_odes(int nmax) {
    if (nmax < 2) throw std::invalid_argument("nmax must be at least 2");
    OdeReport report;
    const PolyC c = PolyC::variable();
    const PolyC one(1);
    GegenbauerTable q = gegenbauer(Rational(-1, 2), nmax);
    PFamilyTable p3 = pfamily_recursion(-3, 2 * nmax - 3);
    PFamilyTable p1 = pfamily_recursion(-1, 2 * nmax - 3);
    auto flag = [&](int n, const char* identity) {
        report.ok = false;
        report.failures.push_back({n, identity});
    };
    for (int n = 2; n <= nmax; ++n) {
        const PolyC& qn = q.entries[n];
        if (!((one - c * c) * qn.derivative().derivative() + qn * Rational(n * (n - 1)))
                 .is_zero())
            flag(n, "gegenbauer_ode");
        PolyC a = p3.entries.at(2 * n - 3).as_polynomial();
        if (!((c * c - one) * a.derivative().derivative() + c * a.derivative() * Rational(4) -
              a * Rational((n + 1) * (n - 2)))
                 .is_zero())
            flag(n, "p3_ode");
        PolyC b = p1.entries.at(2 * n - 3).as_polynomial();
        PolyC c2 = c * c;
        if (!((c2 * c2 - c2) * b.derivative().derivative() +
              c * (c2 + one) * b.derivative() * Rational(2) -
              b * (c2 * Rational(n * (n - 1)) + Rational(2) * one))
                 .is_zero())
            flag(n, "p1_ode");
        if (!(b == c * a)) flag(n, "cross_family");
    }
    return report;
}

}  // namespace djkm
