#pragma once

#include "axial/algebra.hpp"
#include "axial/axis.hpp"

#include <cstddef>
#include <vector>

namespace axial {

/// Invertible linear map on elements, as a matrix acting on coefficients.
using AlgebraMap = Matrix;

/// Involution fixing span(a) + A_{0,0} + A_{0,delta} and negating
/// A_{lambda,0} + A_{lambda,delta}. Identity when lambda is absent.
AlgebraMap tau_lambda(const AxisProfile& profile);

/// Fixes span(a) + A_{0,0} + A_{lambda,0}, negates A_{0,delta} + A_{lambda,delta}.
AlgebraMap tau_delta(const AxisProfile& profile);

/// Fixes span(a) + A_{0,0} + A_{lambda,delta}, negates A_{0,delta} + A_{lambda,0}.
/// Equals tau_lambda * tau_delta.
AlgebraMap tau_diag(const AxisProfile& profile);

/// True iff f is invertible and f(e_i e_j) = f(e_i) f(e_j) for all basis pairs.
bool is_automorphism(const AlgebraTable& table, const AlgebraMap& f);

/// Image f(a). The image of a primitive axis of type (lambda, delta) under
/// an algebra automorphism classifies as a primitive axis of the same type.
Element apply_to_axis(const AlgebraTable& table, const AlgebraMap& f, const Element& a);

/// Orbit of the seed elements under the group generated by the given maps,
/// kept sorted lexicographically by coefficients so the output order is
/// reproducible. Throws input_error beyond `cap` elements.
std::vector<Element> axis_orbit(const AlgebraTable& table, const std::vector<Element>& seeds,
                                const std::vector<AlgebraMap>& maps, std::size_t cap = 10000);

} // namespace axial
