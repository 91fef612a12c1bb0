#pragma once

#include "axial/linalg.hpp"
#include "axial/rational.hpp"
#include "axial/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace axial {

/// Element of a fixed algebra: coefficient vector over the table's basis.
using Element = RatVec;

/// Finite-dimensional algebra over the rationals given by structure
/// constants: e_i * e_j = sum_k gamma[i][j][k] e_k. No commutativity or
/// associativity is assumed; dense storage, intended for n <= 64.
class AlgebraTable {
public:
    AlgebraTable(std::size_t dim, std::vector<std::string> basis_labels);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis() const { return labels_; }

    const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const;
    void set_gamma(std::size_t i, std::size_t j, std::size_t k, Rational value);
    void set_product(std::size_t i, std::size_t j, Element coeffs);
    Element basis_product(std::size_t i, std::size_t j) const;

    Element basis_element(std::size_t i) const;
    Element zero_element() const { return Element(dim_, Rational(0)); }

    bool is_commutative() const;

    /// Copy with gamma[i][j][k] += 1; used by mutation-sensitivity checks.
    AlgebraTable perturbed(std::size_t i, std::size_t j, std::size_t k) const;

    bool operator==(const AlgebraTable& rhs) const = default;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> gamma_; // flat n^3, index (i*n + j)*n + k
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const
    {
        return (i * dim_ + j) * dim_ + k;
    }
};

/// Bilinear product expansion through the structure constants.
Element multiply(const AlgebraTable& table, const Element& u, const Element& v);

/// Column j holds the coefficients of a * e_j.
Matrix left_operator(const AlgebraTable& table, const Element& a);
/// Column j holds the coefficients of e_j * a.
Matrix right_operator(const AlgebraTable& table, const Element& a);

/// Exact eigenspace {v : M v = mu v}.
Subspace eigenspace(const Matrix& m, const Rational& mu);

/// Intersection of the left eigenspace for mu and the right eigenspace
/// for nu with respect to a.
Subspace two_sided_eigenspace(const AlgebraTable& table, const Element& a,
                              const Rational& mu, const Rational& nu);

struct Closure {
    Subspace space;     // smallest product-closed subspace containing the generators
    AlgebraTable table; // induced structure constants on the canonical closure basis
};

/// Fixpoint closure under the product, with the induced table on the
/// closure basis. Iteration count is bounded by the ambient dimension.
Closure subalgebra_closure(const AlgebraTable& table, const std::vector<Element>& generators);

void check_element(const AlgebraTable& table, const Element& v, const char* what);

} // namespace axial
