#include "axial/subspace.hpp"

#include <cassert>

namespace axial {

Subspace Subspace::zero(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RatVec>& vectors)
{
    if (vectors.empty())
        return zero(ambient);
    RrefResult r = rref(Matrix::from_rows(vectors));
    return from_rref(std::move(r.rows), std::move(r.pivots), ambient);
}

Subspace Subspace::from_rref(Matrix rows, std::vector<std::size_t> pivots, std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    assert(s.rows_.cols() == ambient || s.rows_.rows() == 0);
    if (s.rows_.rows() == 0)
        s.rows_ = Matrix(0, ambient);
    return s;
}

bool Subspace::contains(const RatVec& v) const
{
    return coordinates(v).has_value();
}

std::optional<RatVec> Subspace::coordinates(const RatVec& v) const
{
    assert(v.size() == ambient_);
    // RREF rows vanish on each other's pivot columns, so coordinates can be
    // read off the pivot entries; the subtraction check decides membership.
    RatVec coeffs(dim());
    RatVec rem = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        coeffs[k] = rem[pivots_[k]];
        if (coeffs[k] != 0)
            for (std::size_t j = 0; j < ambient_; ++j)
                rem[j] -= coeffs[k] * rows_.at(k, j);
    }
    if (!vec_is_zero(rem))
        return std::nullopt;
    return coeffs;
}

Subspace Subspace::sum(const Subspace& other) const
{
    assert(ambient_ == other.ambient_);
    std::vector<RatVec> all = rows_.row_list();
    for (auto& r : other.rows_.row_list())
        all.push_back(std::move(r));
    return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    assert(ambient_ == other.ambient_);
    const std::size_t r1 = dim();
    const std::size_t r2 = other.dim();
    if (r1 == 0 || r2 == 0)
        return zero(ambient_);

    // v in both spans iff v = U^T x = V^T y; the kernel of [U^T | -V^T]
    // yields the pairs (x, y).
    Matrix sys(ambient_, r1 + r2);
    for (std::size_t i = 0; i < ambient_; ++i) {
        for (std::size_t k = 0; k < r1; ++k)
            sys.at(i, k) = rows_.at(k, i);
        for (std::size_t k = 0; k < r2; ++k)
            sys.at(i, r1 + k) = -other.rows_.at(k, i);
    }
    Matrix ker = nullspace(sys);
    std::vector<RatVec> vectors;
    for (std::size_t t = 0; t < ker.rows(); ++t) {
        RatVec v(ambient_, Rational(0));
        for (std::size_t k = 0; k < r1; ++k)
            if (ker.at(t, k) != 0)
                v = vec_add(v, vec_scale(ker.at(t, k), rows_.row(k)));
        vectors.push_back(std::move(v));
    }
    return span(ambient_, vectors);
}

} // namespace axial
