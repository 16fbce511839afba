#ifndef DJKM_PFAMILIES_HPP
#define DJKM_PFAMILIES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "djkm/series.hpp"

namespace djkm {

/// Gegenbauer polynomials Q_n^(lambda)(c) for n = 0..nmax.
struct GegenbauerTable {
    Rational lambda;
    std::vector<PolyC> entries;
};

/// Three-term recurrence n C_n = 2c(n+lambda-1) C_{n-1} - (n+2lambda-2) C_{n-2}
/// with C_0 = 1, C_1 = 2 lambda c.
GegenbauerTable gegenbauer(const Rational& lambda, int nmax);

/// One of the families P_-4, P_-3, P_-2, P_-1: entries[k] = P_{family,k}
/// for k = -4..kmax.
struct PFamilyTable {
    int family = -4;
    std::map<int, RatFuncC> entries;
};

/// Kronecker-delta initials P_{f,f} = 1 on k = -4..-1, then
/// (6+2k) P_k = 4kc P_{k-2} - 2(k-3) P_{k-4} for k >= 0.
PFamilyTable pfamily_recursion(int family, int kmax);

/// The same family as a generating function sum P_f(c,z) = sum_k P_{f,k} z^{k+4},
/// built from the closed series forms (Gegenbauer expansions of sqrt(1-2cz^2+z^4)
/// and its -3/2 power); truncated at order N.  The divisions by c^2-1 in
/// families -1 and -3 are checked to be exact.
PowerSeriesZ pfamily_series(int family, int N);

/// Result of the generating-function differential equation check.
struct FundeCheck {
    bool ok = true;
    int first_bad_order = -1;
};

/// Verifies (z^5-2cz^3+z) P' - (3z^4-4cz^2+1) P =
/// 2(P_-1 + c P_-3) z^3 + P_-2 z^2 + (4cz^2-1) P_-4 through order N-5,
/// where P runs the recursion from the given initials (P_-4, P_-3, P_-2, P_-1).
FundeCheck check_funde(const std::array<Rational, 4>& initials, int N);

struct OdeFailure {
    int n = 0;
    std::string identity;
};

struct OdeReport {
    bool ok = true;
    std::vector<OdeFailure> failures;
};

/// For 2 <= n <= nmax checks, as exact polynomial identities:
///   (1-c^2) Q_n'' + n(n-1) Q_n = 0                       (gegenbauer_ode)
///   (c^2-1) P'' + 4c P' - (n+1)(n-2) P = 0, P = P_{-3,2n-3}  (p3_ode)
///   (c^4-c^2) P'' + 2c(c^2+1) P' - (c^2 n(n-1)+2) P = 0, P = P_{-1,2n-3}  (p1_ode)
///   P_{-1,2n-3} = c P_{-3,2n-3}                          (cross_family)
OdeReport check_odes(int nmax);

}  // namespace djkm

#endif
