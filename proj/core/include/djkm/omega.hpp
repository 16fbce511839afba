#ifndef DJKM_OMEGA_HPP
#define DJKM_OMEGA_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "djkm/ring.hpp"

namespace djkm {

/// Class in Omega^1_R/dR, in coordinates on the basis
/// (omega_0, omega_-1, omega_-2, omega_-3, omega_-4) where
/// omega_0 = class of t^-1 dt and omega_-k = class of t^-k u dt.
class OmegaClass {
public:
    OmegaClass() = default;

    static OmegaClass omega0(const RatFuncC& coeff = RatFuncC(1));
    /// coeff * omega_-k for k in 1..4.
    static OmegaClass omega_m(int k, const RatFuncC& coeff = RatFuncC(1));

    /// Coordinates in the order omega_0, omega_-1, omega_-2, omega_-3, omega_-4.
    const std::array<RatFuncC, 5>& coords() const { return coords_; }
    const RatFuncC& lam0() const { return coords_[0]; }
    /// Coefficient of omega_-k, k in 1..4.
    const RatFuncC& lam_m(int k) const;

    bool is_zero() const;

    OmegaClass operator-() const;
    OmegaClass& operator+=(const OmegaClass& o);
    OmegaClass& operator-=(const OmegaClass& o);
    friend OmegaClass operator+(OmegaClass a, const OmegaClass& b) { return a += b; }
    friend OmegaClass operator-(OmegaClass a, const OmegaClass& b) { return a -= b; }
    friend OmegaClass operator*(const OmegaClass& a, const RatFuncC& s);
    friend OmegaClass operator*(const RatFuncC& s, const OmegaClass& a) { return a * s; }

    friend bool operator==(const OmegaClass& a, const OmegaClass& b) = default;

    /// Linear combination over basis names omega0, omega_m1, .., omega_m4,
    /// e.g. "(c)/2*omega_m3 + (c^2)/2*omega_m1" rendered in basis order.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const OmegaClass& w);

private:
    std::array<RatFuncC, 5> coords_{};
};

/// Class of t^k u dt.  Basis for k in {-4..-1}; k >= 0 reduced downward by
/// (6+2k) w_k = -2(k-3) w_{k-4} + 4kc w_{k-2}, k <= -5 upward by solving the
/// same relation for its lowest term.  Both divisors are nonzero on their
/// ranges; the singular index k = -3 sits inside the basis window.
OmegaClass reduce_u_dt(int k, const CurveSpec& spec);

/// Reduction of A_dt dt + A_du du to basis coordinates: u du -> (1/2)p'(t) dt,
/// bare t^i du -> -i t^{i-1} u dt (integration by parts), t^-1 dt -> omega_0,
/// other sheet-0 terms are exact, sheet-1 terms via reduce_u_dt.
OmegaClass reduce(const DiffNormalForm& d, const CurveSpec& spec);

/// reduce(f dg): the central term of the Kassel bracket.
OmegaClass cocycle(const RingElem& f, const RingElem& g, const CurveSpec& spec);

/// Basis action of the curve involution: omega_0 -> -omega_0,
/// omega_-1 <-> -omega_-3, omega_-2 -> -omega_-2, omega_-4 -> -omega_-4.
OmegaClass sigma_omega(const OmegaClass& w);

/// sigma on a differential before reduction, using sigma(dt) = -t^-2 dt and
/// sigma(du) = -2t^-3 u dt + t^-2 du.
DiffNormalForm sigma_diff(const DiffNormalForm& d, const CurveSpec& spec);

struct LemmaTerm {
    int exponent = 0;
    RatFuncC coefficient;

    friend bool operator==(const LemmaTerm& a, const LemmaTerm& b) = default;
};

/// The recursion relation of the general curve u^m = p(t), deg p = n:
/// lead + sum(tail) = 0 in Omega^1_R/dR, where lead is the class of
/// ((m+1)n + im) t^{n+i-1} u dt and tail_j the class of
/// ((m+1)j + im) a_j t^{i+j-1} u dt for j = 0..n-1 (zeros retained).
struct LemmaRelation {
    int m = 2;
    int i = 0;
    LemmaTerm lead;
    std::vector<LemmaTerm> tail;
};

LemmaRelation lemma_relation(int m, const CurveSpec& spec, int i);

}  // namespace djkm

#endif
