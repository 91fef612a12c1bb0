#pragma once

#include "axial/algebra.hpp"
#include "axial/axis.hpp"
#include "axial/report.hpp"

#include <cstdint>
#include <cstddef>
#include <vector>

namespace axial {

/// sigma = ab - delta' a - lambda b together with the two scalars
/// gamma = alpha_b (1 - lambda) - delta' and rho = beta_a (1 - delta') - lambda.
struct SigmaScalars {
    Element sigma;
    Rational gamma_scalar;
    Rational rho_scalar;
};

SigmaScalars sigma_scalars(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// Graded components of bab := b(ab) = (ba)b. Two residuals per part:
/// ":proj" (the projection equals the first expansion) and ":alt" (the two
/// expansions agree). Ids bab[pp|mp|pm|mm]:{proj,alt}.
VerificationReport verify_bab(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// Graded components of b = b^2. Ids bsq[pp|mp|pm|mm].
VerificationReport verify_bsquare(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// The eight graded relations extracted from b(ba) and (ab)b, plus the two
/// driver identities b(ba) = beta_a(1-lambda')b + lambda'(ba) and
/// (ab)b = beta_a(1-delta')b + delta'(ab).
/// Ids bba[..], abb[..], driver:bba, driver:abb.
VerificationReport verify_abb(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// The two closed forms of sigma and the c^2 + y^2 relation.
/// Ids sigma:a-form, sigma:b-form, sigma:csq.
VerificationReport verify_sigma(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// Scaling relations on the off-diagonal components x and y, plus the three
/// conditional parts (reported vacuous with the measured closure dimension
/// when their antecedents fail). Ids offdiag:x, offdiag:y, offdiag:beta0[..],
/// offdiag:dim4-nonzero, offdiag:dim4-equal.
VerificationReport verify_offdiag(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// All five identity suites on one frame.
VerificationReport verify_frame(const AlgebraTable& table, const TwoGeneratedFrame& frame);

/// For every unordered pair of listed axes the closure dimension is at most
/// 3 (ids pair-dim(i,j)), and for every axis the ambient space equals
/// span(a) + A_{0,0}(a) + A_{lambda,delta}(a) (ids jordan(k)). Non-axis
/// entries are reported as failures, not thrown.
VerificationReport verify_axes(const AlgebraTable& table, const std::vector<Element>& axes);

/// Full pairwise audit: classification of both elements, fusion gradings,
/// frames in both generator orders with all identity suites, the pair
/// closure bound and both Jordan checks. Never throws on bad tables; every
/// defect becomes a failing entry.
VerificationReport verify_pair(const AlgebraTable& table, const Element& a, const Element& b);

/// Seeded sweep: draws `count` parameter pairs (lambda for the dim-2 family,
/// eta for the one-line Matsuo family) with numerator and denominator in
/// [-9, 9] minus the excluded values, and runs verify_pair on the generators
/// of each constructed algebra. Deterministic for a fixed seed.
VerificationReport verify_random(std::uint64_t seed, std::size_t count);

} // namespace axial
