#pragma once

#include "axial/algebra.hpp"
#include "axial/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace axial {

/// Point-line geometry with 3-point lines where any two distinct points lie
/// on at most one common line.
struct FischerSpace {
    std::vector<std::string> points;
    std::vector<std::array<std::size_t, 3>> lines;
};

/// Throws input_error naming the offending line(s) on invariant violations.
void validate_fischer_space(const FischerSpace& space);

/// Two-dimensional algebra on basis {a, b} with a^2 = a, b^2 = b,
/// ab = (1-lambda)a + lambda b, ba = (1-lambda)b + lambda a. Both basis
/// elements are primitive axes of type (lambda, 1-lambda). lambda must
/// avoid {0, 1, 1/2}: 0 and 1 are not admissible eigenvalues, and 1/2
/// would force lambda = delta, which this non-commutative family excludes.
AlgebraTable dim2_algebra(const Rational& lambda);

/// Commutative algebra on the points of a Fischer space: p*p = p, p*q = 0
/// for non-collinear p, q, and p*q = (eta/4)(p + q - r) when {p,q,r} is a
/// line. Every point is then a primitive axis of type (eta/2, eta/2) with
/// minimal polynomial t(t-1)(t-eta/2), so eta in {0, 2} is rejected (the
/// eigenvalue eta/2 must avoid {0, 1}).
AlgebraTable matsuo_algebra(const FischerSpace& space, const Rational& eta);

/// Single line on three points {a, b, c}.
FischerSpace line3_space();

/// The six transpositions of the symmetric group on four letters; each
/// non-commuting pair {d, e} spans the line {d, e, ded}. Built from the
/// permutations, not hand-entered. 6 points, 4 lines.
FischerSpace sym4_transposition_space();

/// 2x2 matrix-unit algebra (basis e11, e12, e21, e22); its idempotent e11
/// is the standard non-primitive control.
AlgebraTable matrix_unit_algebra();

} // namespace axial
