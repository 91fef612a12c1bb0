#include "axial/linalg.hpp"

#include "axial/error.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace axial {

RatVec vec_add(const RatVec& u, const RatVec& v)
{
    assert(u.size() == v.size());
    RatVec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = u[i] + v[i];
    return out;
}

RatVec vec_sub(const RatVec& u, const RatVec& v)
{
    assert(u.size() == v.size());
    RatVec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = u[i] - v[i];
    return out;
}

RatVec vec_scale(const Rational& s, const RatVec& v)
{
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

bool vec_is_zero(const RatVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<RatVec>& rows)
{
    if (rows.empty())
        return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

RatVec Matrix::row(std::size_t i) const
{
    RatVec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        out[j] = at(i, j);
    return out;
}

std::vector<RatVec> Matrix::row_list() const
{
    std::vector<RatVec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    assert(cols_ == rhs.rows_);
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& lik = at(i, k);
            if (lik == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += lik * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

RatVec Matrix::apply(const RatVec& v) const
{
    assert(v.size() == cols_);
    RatVec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

RrefResult rref(const Matrix& m)
{
    using boost::multiprecision::divide_qr;
    using boost::multiprecision::lcm;

    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();

    // Clear denominators per row; row scaling leaves the row space intact.
    std::vector<std::vector<Integer>> a(nrows, std::vector<Integer>(ncols));
    for (std::size_t i = 0; i < nrows; ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < ncols; ++j)
            scale = lcm(scale, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < ncols; ++j)
            a[i][j] = numerator(m.at(i, j)) * (scale / denominator(m.at(i, j)));
    }

    // Fraction-free forward elimination: every division below is exact.
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t p = row;
        while (p < nrows && a[p][col] == 0)
            ++p;
        if (p == nrows)
            continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = row + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                Integer q, r;
                divide_qr(t, prev, q, r);
                if (r != 0)
                    throw std::logic_error("fraction-free elimination: inexact division");
                a[i][j] = std::move(q);
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivots.push_back(col);
        ++row;
    }

    // Rational back-substitution to the reduced form; zero rows are dropped.
    const std::size_t rank = pivots.size();
    Matrix out(rank, ncols);
    for (std::size_t i = 0; i < rank; ++i) {
        Rational inv_pivot = Rational(1) / Rational(a[i][pivots[i]]);
        for (std::size_t j = pivots[i]; j < ncols; ++j)
            out.at(i, j) = Rational(a[i][j]) * inv_pivot;
    }
    for (std::size_t k = rank; k-- > 0;) {
        for (std::size_t i = 0; i < k; ++i) {
            Rational f = out.at(i, pivots[k]);
            if (f == 0)
                continue;
            for (std::size_t j = pivots[k]; j < ncols; ++j)
                out.at(i, j) -= f * out.at(k, j);
        }
    }
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

Matrix nullspace(const Matrix& m)
{
    const std::size_t n = m.cols();
    RrefResult r = rref(m);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;

    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RatVec v(n, Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            v[r.pivots[k]] = -r.rows.at(k, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty())
        return Matrix(0, n);
    return rref(Matrix::from_rows(basis)).rows;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.pivots.size() < n || r.pivots[n - 1] >= n)
        return std::nullopt; // singular
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = r.rows.at(i, n + j);
    return inv;
}

std::optional<RatVec> solve_combination(const std::vector<RatVec>& rows, const RatVec& v)
{
    const std::size_t m = rows.size();
    const std::size_t n = v.size();
    // Columns are the candidate rows, last column is the target.
    Matrix sys(n, m + 1);
    for (std::size_t k = 0; k < m; ++k) {
        assert(rows[k].size() == n);
        for (std::size_t i = 0; i < n; ++i)
            sys.at(i, k) = rows[k][i];
    }
    for (std::size_t i = 0; i < n; ++i)
        sys.at(i, m) = v[i];

    RrefResult r = rref(sys);
    RatVec coeffs(m, Rational(0));
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        if (r.pivots[k] == m)
            return std::nullopt; // inconsistent
        coeffs[r.pivots[k]] = r.rows.at(k, m);
    }
    // Guard against free variables hiding an inconsistency.
    RatVec check(n, Rational(0));
    for (std::size_t k = 0; k < m; ++k)
        if (coeffs[k] != 0)
            check = vec_add(check, vec_scale(coeffs[k], rows[k]));
    if (check != v)
        return std::nullopt;
    return coeffs;
}

} // namespace axial
