#include "axial/algebra.hpp"

#include "axial/error.hpp"

#include <stdexcept>
#include <utility>

namespace axial {

AlgebraTable::AlgebraTable(std::size_t dim, std::vector<std::string> basis_labels)
    : dim_(dim), labels_(std::move(basis_labels)), gamma_(dim * dim * dim, Rational(0))
{
    if (dim_ == 0)
        throw input_error("algebra dimension must be positive");
    if (labels_.size() != dim_)
        throw input_error("basis label count does not match dimension");
}

const Rational& AlgebraTable::gamma(std::size_t i, std::size_t j, std::size_t k) const
{
    return gamma_[idx(i, j, k)];
}

void AlgebraTable::set_gamma(std::size_t i, std::size_t j, std::size_t k, Rational value)
{
    gamma_[idx(i, j, k)] = std::move(value);
}

void AlgebraTable::set_product(std::size_t i, std::size_t j, Element coeffs)
{
    if (coeffs.size() != dim_)
        throw input_error("product coefficient vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k)
        gamma_[idx(i, j, k)] = std::move(coeffs[k]);
}

Element AlgebraTable::basis_product(std::size_t i, std::size_t j) const
{
    Element out(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        out[k] = gamma(i, j, k);
    return out;
}

Element AlgebraTable::basis_element(std::size_t i) const
{
    Element out(dim_, Rational(0));
    out[i] = 1;
    return out;
}

bool AlgebraTable::is_commutative() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (gamma(i, j, k) != gamma(j, i, k))
                    return false;
    return true;
}

AlgebraTable AlgebraTable::perturbed(std::size_t i, std::size_t j, std::size_t k) const
{
    AlgebraTable out = *this;
    out.gamma_[idx(i, j, k)] += 1;
    return out;
}

void check_element(const AlgebraTable& table, const Element& v, const char* what)
{
    if (v.size() != table.dim())
        throw input_error(std::string(what) + ": element length "
                          + std::to_string(v.size()) + " does not match algebra dimension "
                          + std::to_string(table.dim()));
}

Element multiply(const AlgebraTable& table, const Element& u, const Element& v)
{
    check_element(table, u, "multiply");
    check_element(table, v, "multiply");
    const std::size_t n = table.dim();
    Element out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0)
                continue;
            Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (table.gamma(i, j, k) != 0)
                    out[k] += f * table.gamma(i, j, k);
        }
    }
    return out;
}

Matrix left_operator(const AlgebraTable& table, const Element& a)
{
    check_element(table, a, "left_operator");
    const std::size_t n = table.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element col = multiply(table, a, table.basis_element(j));
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, j) = std::move(col[k]);
    }
    return m;
}

Matrix right_operator(const AlgebraTable& table, const Element& a)
{
    check_element(table, a, "right_operator");
    const std::size_t n = table.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element col = multiply(table, table.basis_element(j), a);
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, j) = std::move(col[k]);
    }
    return m;
}

Subspace eigenspace(const Matrix& m, const Rational& mu)
{
    if (!m.is_square())
        throw input_error("eigenspace requires a square matrix");
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        shifted.at(i, i) -= mu;
    Matrix ker = nullspace(shifted);
    return Subspace::span(m.cols(), ker.row_list());
}

Subspace two_sided_eigenspace(const AlgebraTable& table, const Element& a,
                              const Rational& mu, const Rational& nu)
{
    Subspace left = eigenspace(left_operator(table, a), mu);
    Subspace right = eigenspace(right_operator(table, a), nu);
    return left.intersect(right);
}

Closure subalgebra_closure(const AlgebraTable& table, const std::vector<Element>& generators)
{
    if (generators.empty())
        throw input_error("subalgebra_closure: empty generator list");
    for (const auto& g : generators)
        check_element(table, g, "subalgebra_closure");

    const std::size_t n = table.dim();
    Subspace space = Subspace::span(n, generators);
    // Rank strictly increases every productive round, so n rounds suffice.
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<RatVec> vectors = space.basis_list();
        bool grew = false;
        const std::size_t base = vectors.size();
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t j = 0; j < base; ++j) {
                Element p = multiply(table, vectors[i], vectors[j]);
                if (!space.contains(p)) {
                    vectors.push_back(std::move(p));
                    grew = true;
                }
            }
        if (!grew)
            break;
        space = Subspace::span(n, vectors);
        if (round == n)
            throw std::logic_error("subalgebra_closure failed to stabilize");
    }

    // Induced structure constants on the canonical closure basis; labels are
    // inherited from the pivot columns.
    const std::size_t r = space.dim();
    std::vector<std::string> labels(r);
    for (std::size_t k = 0; k < r; ++k)
        labels[k] = table.basis()[space.pivots()[k]];
    AlgebraTable induced(r, labels);
    std::vector<RatVec> basis = space.basis_list();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Element p = multiply(table, basis[i], basis[j]);
            auto coords = space.coordinates(p);
            if (!coords)
                throw std::logic_error("closure basis product escaped the closure");
            induced.set_product(i, j, std::move(*coords));
        }
    return {std::move(space), std::move(induced)};
}

} // namespace axial
