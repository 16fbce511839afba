#include "djkm/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace djkm {

namespace {

size_t idx3(int dim, int i, int j, int k) {
    return (static_cast<size_t>(i) * dim + j) * dim + k;
}

size_t idx2(int dim, int i, int j) { return static_cast<size_t>(i) * dim + j; }

Rational determinant(int dim, std::vector<Rational> m) {
    Rational det(1);
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row)
            if (!m[idx2(dim, row, col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < dim; ++j)
                std::swap(m[idx2(dim, pivot, j)], m[idx2(dim, col, j)]);
            det = -det;
        }
        const Rational& lead = m[idx2(dim, col, col)];
        det *= lead;
        for (int row = col + 1; row < dim; ++row) {
            Rational factor = m[idx2(dim, row, col)] / lead;
            if (factor.is_zero()) continue;
            for (int j = col; j < dim; ++j)
                m[idx2(dim, row, j)] -= factor * m[idx2(dim, col, j)];
        }
    }
    return det;
}

std::string triple_name(const std::vector<std::string>& labels, int i, int j, int k) {
    return "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
}

void validate_constants(int dim, const std::vector<std::string>& labels,
                        const std::vector<Rational>& c) {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!(c[idx3(dim, i, j, k)] + c[idx3(dim, j, i, k)]).is_zero())
                    throw std::invalid_argument("antisymmetry fails on " +
                                                triple_name(labels, i, j, k));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int m = 0; m < dim; ++m) {
                    Rational sum;
                    for (int l = 0; l < dim; ++l) {
                        sum += c[idx3(dim, j, k, l)] * c[idx3(dim, i, l, m)];
                        sum += c[idx3(dim, k, i, l)] * c[idx3(dim, j, l, m)];
                        sum += c[idx3(dim, i, j, l)] * c[idx3(dim, k, l, m)];
                    }
                    if (!sum.is_zero())
                        throw std::invalid_argument("Jacobi identity fails on " +
                                                    triple_name(labels, i, j, k));
                }
}

void validate_form(int dim, const std::vector<std::string>& labels,
                   const std::vector<Rational>& c, const std::vector<Rational>& form) {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!(form[idx2(dim, i, j)] == form[idx2(dim, j, i)]))
                throw std::invalid_argument("invariant form is not symmetric");
    // kappa([x_i, x_j], x_k) = kappa(x_i, [x_j, x_k])
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Rational lhs, rhs;
                for (int l = 0; l < dim; ++l) {
                    lhs += c[idx3(dim, i, j, l)] * form[idx2(dim, l, k)];
                    rhs += c[idx3(dim, j, k, l)] * form[idx2(dim, i, l)];
                }
                if (!(lhs == rhs))
                    throw std::invalid_argument("invariant form fails invariance on " +
                                                triple_name(labels, i, j, k));
            }
    if (determinant(dim, form).is_zero())
        throw std::invalid_argument("invariant form is degenerate");
}

}  // namespace

std::vector<Rational> killing_from_constants(int dim, const std::vector<Rational>& constants) {
    std::vector<Rational> kappa(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rational sum;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b)
                    sum += constants[idx3(dim, i, a, b)] * constants[idx3(dim, j, b, a)];
            kappa[idx2(dim, i, j)] = sum;
        }
    return kappa;
}

SimpleLieAlgebra SimpleLieAlgebra::sl2() {
    const int dim = 3;  // basis order (e, h, f)
    std::vector<Rational> c(27);
    auto set = [&](int i, int j, int k, long v) {
        c[idx3(dim, i, j, k)] = Rational(v);
        c[idx3(dim, j, i, k)] = Rational(-v);
    };
    set(1, 0, 0, 2);   // [h,e] = 2e
    set(1, 2, 2, -2);  // [h,f] = -2f
    set(0, 2, 1, 1);   // [e,f] = h
    SimpleLieAlgebra L;
    L.dim_ = dim;
    L.labels_ = {"e", "h", "f"};
    L.form_ = killing_from_constants(dim, c);
    L.c_ = std::move(c);
    return L;
}

SimpleLieAlgebra SimpleLieAlgebra::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int dim = -1;
    std::vector<std::string> labels;
    std::vector<Rational> c;
    std::vector<char> seen;
    std::vector<Rational> form;
    bool has_form = false;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("structure constants line " + std::to_string(lineno) +
                                    ": " + what);
    };
    auto check_index = [&](int i) {
        if (i < 0 || i >= dim) fail("index out of range");
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "dim") {
            if (dim >= 0) fail("duplicate dim");
            if (!(ls >> dim) || dim < 1) fail("bad dimension");
            c.assign(static_cast<size_t>(dim) * dim * dim, Rational(0));
            seen.assign(c.size(), 0);
            form.assign(static_cast<size_t>(dim) * dim, Rational(0));
        } else if (head == "labels") {
            if (dim < 0) fail("labels before dim");
            std::string lab;
            while (ls >> lab) labels.push_back(lab);
            if (static_cast<int>(labels.size()) != dim) fail("expected one label per basis element");
        } else if (head == "form") {
            if (dim < 0) fail("form before dim");
            int i, j;
            std::string value;
            if (!(ls >> i >> j >> value)) fail("expected: form i j value");
            check_index(i);
            check_index(j);
            form[idx2(dim, i, j)] = Rational::parse(value);
            form[idx2(dim, j, i)] = form[idx2(dim, i, j)];
            has_form = true;
        } else {
            if (dim < 0) fail("structure constant before dim");
            int i, j, k;
            std::string value;
            std::istringstream entry(line);
            if (!(entry >> i >> j >> k >> value)) fail("expected: i j k value");
            check_index(i);
            check_index(j);
            check_index(k);
            c[idx3(dim, i, j, k)] = Rational::parse(value);
            seen[idx3(dim, i, j, k)] = 1;
        }
    }
    if (dim < 0) throw std::invalid_argument("structure constants: missing dim");
    if (labels.empty())
        for (int i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (seen[idx3(dim, i, j, k)] && !seen[idx3(dim, j, i, k)])
                    c[idx3(dim, j, i, k)] = -c[idx3(dim, i, j, k)];
    validate_constants(dim, labels, c);
    std::vector<Rational> kappa = killing_from_constants(dim, c);
    if (determinant(dim, kappa).is_zero()) throw std::domain_error("not semisimple");
    if (has_form) validate_form(dim, labels, c, form);
    SimpleLieAlgebra L;
    L.dim_ = dim;
    L.labels_ = std::move(labels);
    L.c_ = std::move(c);
    L.form_ = has_form ? std::move(form) : std::move(kappa);
    L.custom_form_ = has_form;
    return L;
}

SimpleLieAlgebra SimpleLieAlgebra::unchecked(int dim, std::vector<std::string> labels,
                                             std::vector<Rational> constants,
                                             std::vector<Rational> form, bool custom_form) {
    SimpleLieAlgebra L;
    L.dim_ = dim;
    L.labels_ = std::move(labels);
    L.c_ = std::move(constants);
    L.form_ = std::move(form);
    L.custom_form_ = custom_form;
    return L;
}

const Rational& SimpleLieAlgebra::structure(int i, int j, int k) const {
    return c_[idx3(dim_, i, j, k)];
}

const Rational& SimpleLieAlgebra::form(int i, int j) const { return form_[idx2(dim_, i, j)]; }

std::vector<std::pair<int, Rational>> SimpleLieAlgebra::bracket(int i, int j) const {
    std::vector<std::pair<int, Rational>> out;
    for (int k = 0; k < dim_; ++k) {
        const Rational& v = c_[idx3(dim_, i, j, k)];
        if (!v.is_zero()) out.emplace_back(k, v);
    }
    return out;
}

}  // namespace djkm
