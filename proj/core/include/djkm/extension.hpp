#ifndef DJKM_EXTENSION_HPP
#define DJKM_EXTENSION_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "djkm/liealg.hpp"
#include "djkm/omega.hpp"

namespace djkm {

/// Element of the centrally extended current algebra
/// (g tensor R) + Omega^1_R/dR: a finite sum of x_i tensor f_i plus a
/// central class.
class ExtElement {
public:
    ExtElement() = default;

    static ExtElement loop(int basis_index, const RingElem& f);
    static ExtElement central(const OmegaClass& w);

    const std::map<int, RingElem>& loops() const { return loops_; }
    const OmegaClass& center() const { return center_; }

    bool is_zero() const { return loops_.empty() && center_.is_zero(); }

    void add_loop(int basis_index, const RingElem& f);
    void add_center(const OmegaClass& w) { center_ += w; }

    ExtElement operator-() const;
    ExtElement& operator+=(const ExtElement& o);
    ExtElement& operator-=(const ExtElement& o);
    friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
    friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
    friend ExtElement operator*(const ExtElement& a, const RatFuncC& s);

    friend bool operator==(const ExtElement& a, const ExtElement& b) = default;

    /// "e@(t^2*u) + h@(1) + [omega0]" with loop coefficients in the ring
    /// grammar; labels default to x0, x1, ...
    std::string str(const std::vector<std::string>& labels = {}) const;

private:
    std::map<int, RingElem> loops_;
    OmegaClass center_;
};

/// Central value attached to a loop-exponent sum s = i+j.
struct PsiValue {
    int s = 0;
    OmegaClass value;
};

/// psi by its closed cases:
///   s in {1,0,-1,-2}            -> omega_{s-2}
///   odd s >= 3                  -> P_{-3,s-2} (omega_-3 + c omega_-1)
///   odd s <= -3                 -> P_{-3,|s|-2} (c omega_-3 + omega_-1)
///   even |s| >= 2               -> P_{-4,|s|-2} omega_-4 + P_{-2,|s|-2} omega_-2
/// Always equal to reduce(t^{s-2} u dt).
PsiValue psi(int s);

/// Override hook for the central psi values used by bracket_closed (tests
/// inject corrupted tables through it).
using PsiFn = std::function<OmegaClass(int)>;

/// Kassel's bracket: [x tensor f, y tensor g] = [x,y] tensor fg plus
/// kappa(x,y) cocycle(f,g); central summands bracket to zero.
ExtElement bracket_kassel(const ExtElement& a, const ExtElement& b, const SimpleLieAlgebra& L,
                          const CurveSpec& spec);

/// The same bracket from the closed case formulas (tt, uu, ut/tu) with
/// central terms delta-supported on omega_0 or given by psi.  psi_fn
/// defaults to psi().
ExtElement bracket_closed(const ExtElement& a, const ExtElement& b, const SimpleLieAlgebra& L,
                          const CurveSpec& spec, const PsiFn& psi_fn = {});

/// The involution lift: sigma_ring on loop coefficients, sigma_omega on the
/// center.
ExtElement sigma_ext(const ExtElement& a, const CurveSpec& spec);

/// True when every component of a lies in the given Z2-parity: sheet-0
/// loops and omega_0 are even, sheet-1 loops and omega_-1..omega_-4 odd.
bool has_parity(const ExtElement& a, int parity);

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_counterexample;
};

struct VerifyReport {
    bool ok = true;
    std::vector<CheckResult> checks;
};

/// Sweeps the requested checks over the basis x_d tensor t^i u^s with
/// |i| <= window, s in {0,1}.  Known checks: antisymmetry, jacobi,
/// agreement, sigma, grading.  Deterministic iteration; each result
/// records case/failure counts and the first counterexample.
VerifyReport verify(const SimpleLieAlgebra& L, int window,
                    const std::vector<std::string>& checks, const CurveSpec& spec,
                    const PsiFn& psi_fn = {});

}  // namespace djkm

#endif
