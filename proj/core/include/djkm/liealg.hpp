#ifndef DJKM_LIEALG_HPP
#define DJKM_LIEALG_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "djkm/rational.hpp"

namespace djkm {

/// kappa_{ij} = sum_{a,b} c_{ia}^b c_{jb}^a, the Killing form as a row-major
/// dim x dim matrix.  constants is the flat c_{ij}^k array, index
/// (i*dim + j)*dim + k.
std::vector<Rational> killing_from_constants(int dim, const std::vector<Rational>& constants);

/// Finite-dimensional Lie algebra by structure constants, with an invariant
/// symmetric nondegenerate bilinear form (the Killing form unless a custom
/// one is supplied).  Instances from sl2() and from_text() are validated;
/// unchecked() skips validation so tests can inject faults.
class SimpleLieAlgebra {
public:
    /// Basis (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    static SimpleLieAlgebra sl2();

    /// Parses a structure-constant file:
    ///   dim 3
    ///   labels e h f
    ///   i j k value      (c_{ij}^k, 0-based indices, rational value)
    ///   form i j value   (optional; defaults to the Killing form)
    /// '#' starts a comment.  Unset mirror entries c_{ji}^k default to
    /// -c_{ij}^k.  Throws std::invalid_argument on malformed input or
    /// antisymmetry/Jacobi violations (naming the first bad triple) and
    /// std::domain_error("not semisimple") when the Killing form is
    /// degenerate.
    static SimpleLieAlgebra from_text(std::string_view text);

    static SimpleLieAlgebra unchecked(int dim, std::vector<std::string> labels,
                                      std::vector<Rational> constants,
                                      std::vector<Rational> form, bool custom_form = false);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& constants() const { return c_; }
    const std::vector<Rational>& form_matrix() const { return form_; }
    /// True when the form was supplied rather than computed.
    bool custom_form() const { return custom_form_; }

    /// c_{ij}^k.
    const Rational& structure(int i, int j, int k) const;
    /// Form pairing of basis elements i, j.
    const Rational& form(int i, int j) const;

    /// [x_i, x_j] as sparse basis coefficients, ascending index.
    std::vector<std::pair<int, Rational>> bracket(int i, int j) const;

private:
    SimpleLieAlgebra() = default;

    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
    std::vector<Rational> form_;
    bool custom_form_ = false;
};

}  // namespace djkm

#endif
