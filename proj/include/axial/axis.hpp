#pragma once

#include "axial/algebra.hpp"
#include "axial/polynomial.hpp"
#include "axial/report.hpp"
#include "axial/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace axial {

/// The five two-sided eigenspaces of an idempotent a, indexed by side:
/// s11 = A_{1,1}, s00 = A_{0,0}, sL0 = A_{lambda,0}, s0D = A_{0,delta},
/// sLD = A_{lambda,delta}. When an eigenvalue is absent the corresponding
/// spaces are zero.
struct TwoSidedSpaces {
    Subspace s11, s00, sL0, s0D, sLD;
};

/// Full two-sided classification of an idempotent. A failed classification
/// is carried in the profile (failure reason set, flags false), never
/// thrown, so batch scans over many idempotents can proceed.
struct AxisProfile {
    Element axis;
    std::optional<Rational> lambda; // left eigenvalue outside {0,1}, absent if min poly | t(t-1)
    std::optional<Rational> delta;  // right counterpart
    bool idempotent = false;
    bool left_axis = false;  // min poly of L_a divides t(t-1)(t-lambda)
    bool right_axis = false;
    bool primitive_left = false;  // dim A_1(L_a) == 1
    bool primitive_right = false;
    bool operators_commute = false;
    bool direct_sum = false; // five spaces independent and spanning
    TwoSidedSpaces spaces;
    bool jordan_type = false; // both off-diagonal spaces sL0, s0D are zero
    Polynomial minpoly_left, minpoly_right;
    std::string failure; // first reason the element is not a primitive two-sided axis

    bool primitive_two_sided() const
    {
        return idempotent && left_axis && right_axis && primitive_left && primitive_right
            && operators_commute && direct_sum;
    }
};

bool is_idempotent(const AlgebraTable& table, const Element& a);

AxisProfile classify_axis(const AlgebraTable& table, const Element& a);

/// v = alpha * a + comp_00 + comp_L0 + comp_0D + comp_LD, each component in
/// its declared two-sided eigenspace.
struct TwoSidedDecomposition {
    Rational alpha;
    Element comp_00, comp_L0, comp_0D, comp_LD;
};

/// Unique exact decomposition of v over a primitive two-sided axis profile.
TwoSidedDecomposition decompose(const AxisProfile& profile, const Element& v);

/// Verifies the Z2 x Z2 grading: for every ordered pair of graded parts
/// (++ = span(a) + A_{0,0}, +- = A_{0,delta}, -+ = A_{lambda,0},
/// -- = A_{lambda,delta}) and every pair of basis vectors, the product's
/// components outside the sign-product target part must vanish. Entries are
/// emitted for violations only.
VerificationReport check_fusion(const AlgebraTable& table, const AxisProfile& profile);

/// Two primitive axes a, b with both decompositions: b over a gives scalar
/// alpha_b and components c, x, y, z; a over b gives beta_a and the primed
/// components. The closure of {a, b} is spanned by {a,c,x,y,z} and by
/// {b,c',x',y',z'}; lambda/delta/lambda_p/delta_p are the resolved scalars
/// (an absent eigenvalue is replaced by 2, which satisfies every identity
/// vacuously since its eigenspaces are zero).
struct TwoGeneratedFrame {
    AxisProfile profile_a, profile_b;
    Rational alpha_b, beta_a;
    Element c, x, y, z;
    Element c_prime, x_prime, y_prime, z_prime;
    Subspace closure;
    Rational lambda, delta, lambda_p, delta_p;
};

TwoGeneratedFrame build_frame(const AlgebraTable& table, const Element& a, const Element& b);

/// Idempotents found by exhaustive search over coefficient vectors with
/// entries in {0, 1, -1} plus any extra scalars supplied. Zero is skipped.
std::vector<Element> find_idempotents(const AlgebraTable& table,
                                      const std::vector<Rational>& extra_coeffs = {});

/// find_idempotents filtered to primitive two-sided axes.
std::vector<Element> find_axes(const AlgebraTable& table);

} // namespace axial
