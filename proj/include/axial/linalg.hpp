#pragma once

#include "axial/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace axial {

using RatVec = std::vector<Rational>;

RatVec vec_add(const RatVec& u, const RatVec& v);
RatVec vec_sub(const RatVec& u, const RatVec& v);
RatVec vec_scale(const Rational& s, const RatVec& v);
bool vec_is_zero(const RatVec& v);

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<RatVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    std::vector<RatVec> row_list() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    RatVec apply(const RatVec& v) const; // M * v

    bool operator==(const Matrix& rhs) const = default;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix rows;                 // rank many reduced rows, zero rows dropped
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

/// Reduced row echelon form. Rows are first scaled to integers, the forward
/// pass is fraction-free (Bareiss two-term updates, exact divisions), and the
/// reduced form is recovered by rational back-substitution.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// RREF basis of the right kernel {v : M v = 0}, one basis vector per row.
Matrix nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Coefficients expressing v as a linear combination of the given rows,
/// or nullopt when v lies outside their span.
std::optional<RatVec> solve_combination(const std::vector<RatVec>& rows, const RatVec& v);

} // namespace axial
