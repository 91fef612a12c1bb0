#pragma once

// Test-only reference implementations, deliberately independent of the
// library's fraction-free elimination: plain rational Gauss-Jordan with
// partial pivoting. Used to cross-check RREF, nullspaces, eigenprojections
// and frozen expected values.

#include "axial/linalg.hpp"
#include "axial/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using axial::Matrix;
using axial::Rational;
using axial::RatVec;

inline Matrix naive_rref(const Matrix& input, std::vector<std::size_t>* pivots_out = nullptr)
{
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = 0; j < cols; ++j)
            m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            Rational f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.at(i, j) = m.at(i, j);
    if (pivots_out)
        *pivots_out = pivots;
    return out;
}

inline Matrix naive_nullspace(const Matrix& m)
{
    std::vector<std::size_t> pivots;
    Matrix r = naive_rref(m, &pivots);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RatVec v(n, Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty())
        return Matrix(0, n);
    return naive_rref(Matrix::from_rows(basis));
}

// Projection of v onto span(target) along span(rest): solves over the
// combined basis and keeps the target coordinates.
inline std::optional<RatVec> naive_solve(const std::vector<RatVec>& columns, const RatVec& v)
{
    const std::size_t n = v.size(), m = columns.size();
    Matrix aug(n, m + 1);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i)
            aug.at(i, k) = columns[k][i];
    for (std::size_t i = 0; i < n; ++i)
        aug.at(i, m) = v[i];
    std::vector<std::size_t> pivots;
    Matrix r = naive_rref(aug, &pivots);
    RatVec coeffs(m, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == m)
            return std::nullopt;
        coeffs[pivots[k]] = r.at(k, m);
    }
    RatVec check(n, Rational(0));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i)
            check[i] += coeffs[k] * columns[k][i];
    if (check != v)
        return std::nullopt;
    return coeffs;
}

// Small deterministic generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi)
    {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long long lo = -4, long long hi = 4, long long max_den = 3)
    {
        return Rational(range(lo, hi)) / Rational(range(1, max_den));
    }
    RatVec vec(std::size_t n)
    {
        RatVec v(n);
        for (auto& c : v)
            c = rational();
        return v;
    }
    Matrix matrix(std::size_t rows, std::size_t cols)
    {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = rational();
        return m;
    }

private:
    std::uint64_t state_;
};

} // namespace oracle
