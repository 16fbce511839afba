#include "djkm/extension.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "djkm/pfamilies.hpp"

namespace djkm {

ExtElement ExtElement::loop(int basis_index, const RingElem& f) {
    ExtElement a;
    a.add_loop(basis_index, f);
    return a;
}

ExtElement ExtElement::central(const OmegaClass& w) {
    ExtElement a;
    a.center_ = w;
    return a;
}

void ExtElement::add_loop(int basis_index, const RingElem& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = loops_.try_emplace(basis_index, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) loops_.erase(it);
    }
}

ExtElement ExtElement::operator-() const {
    ExtElement a;
    for (const auto& [x, f] : loops_) a.loops_.emplace(x, -f);
    a.center_ = -center_;
    return a;
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
    for (const auto& [x, f] : o.loops_) add_loop(x, f);
    center_ += o.center_;
    return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
    for (const auto& [x, f] : o.loops_) add_loop(x, -f);
    center_ -= o.center_;
    return *this;
}

ExtElement operator*(const ExtElement& a, const RatFuncC& s) {
    ExtElement r;
    for (const auto& [x, f] : a.loops_) r.add_loop(x, f * s);
    r.center_ = a.center_ * s;
    return r;
}

std::string ExtElement::str(const std::vector<std::string>& labels) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, f] : loops_) {
        if (!first) os << " + ";
        first = false;
        if (x < static_cast<int>(labels.size()))
            os << labels[x];
        else
            os << "x" << x;
        os << "@(" << f.str() << ")";
    }
    if (!center_.is_zero()) {
        if (!first) os << " + ";
        os << "[" << center_.str() << "]";
    }
    return os.str();
}

PsiValue psi(int s) {
    if (s <= 1 && s >= -2) return {s, OmegaClass::omega_m(2 - s)};
    const RatFuncC c = RatFuncC::variable();
    int k = (s > 0 ? s : -s) - 2;
    if (s % 2 != 0) {
        RatFuncC p3 = pfamily_recursion(-3, k).entries.at(k);
        OmegaClass w = s > 0 ? OmegaClass::omega_m(3) + OmegaClass::omega_m(1, c)
                             : OmegaClass::omega_m(3, c) + OmegaClass::omega_m(1);
        return {s, w * p3};
    }
    PFamilyTable p4 = pfamily_recursion(-4, k);
    PFamilyTable p2 = pfamily_recursion(-2, k);
    return {s, OmegaClass::omega_m(4, p4.entries.at(k)) + OmegaClass::omega_m(2, p2.entries.at(k))};
}

namespace {

RingElem normalize_sheets(const RingElem& f, const CurveSpec& spec) {
    return ring_mul(f, RingElem::constant(RatFuncC(1)), spec);
}

}  // namespace

ExtElement bracket_kassel(const ExtElement& a, const ExtElement& b, const SimpleLieAlgebra& L,
                          const CurveSpec& spec) {
    ExtElement out;
    for (const auto& [xa, fa] : a.loops())
        for (const auto& [xb, fb] : b.loops()) {
            RingElem fg = ring_mul(fa, fb, spec);
            for (const auto& [k, v] : L.bracket(xa, xb)) out.add_loop(k, fg * RatFuncC(v));
            const Rational& kappa = L.form(xa, xb);
            if (!kappa.is_zero()) out.add_center(cocycle(fa, fb, spec) * RatFuncC(kappa));
        }
    return out;
}

ExtElement bracket_closed(const ExtElement& a, const ExtElement& b, const SimpleLieAlgebra& L,
                          const CurveSpec& spec, const PsiFn& psi_fn) {
    if (!spec.is_djkm()) throw std::domain_error("closed bracket requires the DJKM curve");
    const PsiFn& pf = psi_fn ? psi_fn : PsiFn([](int s) { return psi(s).value; });
    const RatFuncC c = spec.p_coeffs[2] * RatFuncC(Rational(-1, 2));
    std::map<int, RingElem> b_loops;
    for (const auto& [xb, fb_raw] : b.loops())
        b_loops.emplace(xb, normalize_sheets(fb_raw, spec));
    ExtElement out;
    for (const auto& [xa, fa_raw] : a.loops()) {
        RingElem fa = normalize_sheets(fa_raw, spec);
        for (const auto& [xb, fb] : b_loops) {
            auto xy = L.bracket(xa, xb);
            RatFuncC kappa{L.form(xa, xb)};
            for (const auto& [ka, ca] : fa.terms())
                for (const auto& [kb, cb] : fb.terms()) {
                    auto [ia, sa] = ka;
                    auto [ib, sb] = kb;
                    RatFuncC fc = ca * cb;
                    RingElem prod;
                    OmegaClass cen;
                    if (sa == 0 && sb == 0) {
                        prod = RingElem::t(ia + ib);
                        if (ia + ib == 0) cen = OmegaClass::omega0(RatFuncC(ib));
                    } else if (sa == 1 && sb == 1) {
                        // t^{ia+ib} p(t) on sheet 0
                        for (int j = 0; j <= spec.degree(); ++j)
                            if (!spec.p_coeffs[j].is_zero())
                                prod.add_term(ia + ib + j, 0, spec.p_coeffs[j]);
                        int i = ia + 1, j = ib + 1;
                        RatFuncC z;
                        if (i + j == -2) z += RatFuncC(j + 1);
                        if (i + j == 0) z -= c * RatFuncC(2 * j);
                        if (i + j == 2) z += RatFuncC(j - 1);
                        cen = OmegaClass::omega0(z);
                    } else if (sa == 1 && sb == 0) {
                        prod = RingElem::monomial(ia + ib, 1, RatFuncC(1));
                        if (ib != 0) cen = pf(ia + ib + 1) * RatFuncC(ib);
                    } else {
                        prod = RingElem::monomial(ia + ib, 1, RatFuncC(1));
                        if (ia != 0) cen = pf(ia + ib + 1) * RatFuncC(-ia);
                    }
                    for (const auto& [k, v] : xy) out.add_loop(k, prod * (fc * RatFuncC(v)));
                    if (!kappa.is_zero()) out.add_center(cen * (fc * kappa));
                }
        }
    }
    return out;
}

ExtElement sigma_ext(const ExtElement& a, const CurveSpec& spec) {
    ExtElement out;
    for (const auto& [x, f] : a.loops()) out.add_loop(x, sigma_ring(f, spec));
    out.add_center(sigma_omega(a.center()));
    return out;
}

bool has_parity(const ExtElement& a, int parity) {
    for (const auto& [x, f] : a.loops())
        for (const auto& [key, coeff] : f.terms())
            if ((key.second & 1) != parity) return false;
    const auto& w = a.center().coords();
    if (parity == 0) {
        for (int i = 1; i < 5; ++i)
            if (!w[i].is_zero()) return false;
    } else if (!w[0].is_zero()) {
        return false;
    }
    return true;
}

VerifyReport verify(const SimpleLieAlgebra& L, int window,
                    const std::vector<std::string>& checks, const CurveSpec& spec,
                    const PsiFn& psi_fn) {
    if (window < 0) throw std::invalid_argument("window must be nonnegative");

    auto cache = std::make_shared<std::map<int, OmegaClass>>();
    PsiFn base = psi_fn ? psi_fn : PsiFn([](int s) { return psi(s).value; });
    PsiFn cached = [cache, base](int s) {
        auto it = cache->find(s);
        if (it == cache->end()) it = cache->emplace(s, base(s)).first;
        return it->second;
    };

    struct BasisEntry {
        int sheet;
        ExtElement el;
        std::string name;
    };
    std::vector<BasisEntry> basis;
    for (int i = -window; i <= window; ++i)
        for (int s = 0; s <= 1; ++s)
            for (int x = 0; x < L.dim(); ++x) {
                RingElem mono = RingElem::monomial(i, s, RatFuncC(1));
                basis.push_back({s, ExtElement::loop(x, mono),
                                 L.labels()[x] + "@(" + mono.str() + ")"});
            }
    const size_t n = basis.size();

    VerifyReport report;
    auto cl = [&](const ExtElement& a, const ExtElement& b) {
        return bracket_closed(a, b, L, spec, cached);
    };
    auto record = [&](CheckResult& r, bool ok, const std::string& witness) {
        ++r.cases;
        if (!ok) {
            ++r.failures;
            if (r.first_counterexample.empty()) r.first_counterexample = witness;
        }
    };

    for (const std::string& check : checks) {
        CheckResult result;
        result.name = check;
        if (check == "antisymmetry") {
            for (size_t p = 0; p < n; ++p)
                for (size_t q = p; q < n; ++q)
                    record(result, (cl(basis[p].el, basis[q].el) + cl(basis[q].el, basis[p].el)).is_zero(),
                           "(" + basis[p].name + ", " + basis[q].name + ")");
        } else if (check == "jacobi") {
            std::vector<ExtElement> pair_table(n * n);
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    pair_table[p * n + q] = cl(basis[p].el, basis[q].el);
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    for (size_t r = 0; r < n; ++r) {
                        ExtElement sum = cl(basis[p].el, pair_table[q * n + r]);
                        sum += cl(basis[q].el, pair_table[r * n + p]);
                        sum += cl(basis[r].el, pair_table[p * n + q]);
                        record(result, sum.is_zero(),
                               "(" + basis[p].name + ", " + basis[q].name + ", " +
                                   basis[r].name + ")");
                    }
        } else if (check == "agreement") {
            for (size_t p = 0; p < n; ++p)
                for (size_t q = p; q < n; ++q)
                    record(result,
                           cl(basis[p].el, basis[q].el) ==
                               bracket_kassel(basis[p].el, basis[q].el, L, spec),
                           "(" + basis[p].name + ", " + basis[q].name + ")");
        } else if (check == "sigma") {
            for (size_t p = 0; p < n; ++p)
                for (size_t q = p; q < n; ++q)
                    record(result,
                           sigma_ext(cl(basis[p].el, basis[q].el), spec) ==
                               cl(sigma_ext(basis[p].el, spec), sigma_ext(basis[q].el, spec)),
                           "(" + basis[p].name + ", " + basis[q].name + ")");
        } else if (check == "grading") {
            for (size_t p = 0; p < n; ++p)
                for (size_t q = p; q < n; ++q)
                    record(result,
                           has_parity(cl(basis[p].el, basis[q].el),
                                      (basis[p].sheet + basis[q].sheet) & 1),
                           "(" + basis[p].name + ", " + basis[q].name + ")");
        } else {
            throw std::invalid_argument("unknown check: " + check);
        }
        if (result.failures > 0) report.ok = false;
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace djkm
