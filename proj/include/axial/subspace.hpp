#pragma once

#include "axial/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace axial {

/// Subspace of F^n in canonical form: basis rows in RREF with strictly
/// increasing pivot columns. Two subspaces are equal iff their canonical
/// matrices are equal.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<RatVec>& vectors);
    static Subspace from_rref(Matrix rows, std::vector<std::size_t> pivots, std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.rows(); }
    const Matrix& basis_rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<RatVec> basis_list() const { return rows_.row_list(); }

    bool contains(const RatVec& v) const;
    /// Coordinates of v in the canonical basis rows (nullopt if outside).
    std::optional<RatVec> coordinates(const RatVec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_ = 0;
    Matrix rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace axial
