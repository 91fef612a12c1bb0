#include "axial/axis.hpp"
#include "axial/constructions.hpp"
#include "axial/error.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace axial;

namespace {

Element el(std::initializer_list<Rational> cs)
{
    return Element(cs);
}

// Eigenprojection oracle: expresses v over the stacked eigenbases with the
// naive solver and rebuilds one component.
Element oracle_component(const AxisProfile& p, const Element& v, int which)
{
    std::vector<RatVec> cols{p.axis};
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (const Subspace* s : {&p.spaces.s00, &p.spaces.sL0, &p.spaces.s0D, &p.spaces.sLD}) {
        std::size_t b = cols.size();
        for (auto& r : s->basis_list())
            cols.push_back(std::move(r));
        ranges.emplace_back(b, cols.size());
    }
    auto coeffs = oracle::naive_solve(cols, v);
    REQUIRE(coeffs);
    Element out(v.size(), Rational(0));
    if (which < 0) {
        out = vec_scale((*coeffs)[0], p.axis);
        return out;
    }
    for (std::size_t k = ranges[which].first; k < ranges[which].second; ++k)
        out = vec_add(out, vec_scale((*coeffs)[k], cols[k]));
    return out;
}

} // namespace

TEST_CASE("is_idempotent")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    CHECK(is_idempotent(m3, m3.basis_element(0)));
    CHECK(is_idempotent(m3, m3.zero_element()));
    CHECK(!is_idempotent(m3, vec_scale(Rational(1, 2), m3.basis_element(0))));
}

TEST_CASE("classify_axis on the dim-2 family")
{
    AlgebraTable t = dim2_algebra(Rational(1, 3));
    AxisProfile p = classify_axis(t, t.basis_element(0));
    REQUIRE(p.primitive_two_sided());
    CHECK(*p.lambda == Rational(1, 3));
    CHECK(*p.delta == Rational(2, 3));
    CHECK(p.operators_commute);
    CHECK(p.jordan_type);
    CHECK(p.spaces.s11 == Subspace::span(2, {t.basis_element(0)}));
    CHECK(p.spaces.s00.dim() == 0);
    CHECK(p.spaces.sL0.dim() == 0);
    CHECK(p.spaces.s0D.dim() == 0);
    CHECK(p.spaces.sLD == Subspace::span(2, {el({Rational(-1), Rational(1)})}));
}

TEST_CASE("classify_axis on the one-line matsuo algebra")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile p = classify_axis(m3, m3.basis_element(0));
    REQUIRE(p.primitive_two_sided());
    CHECK(*p.lambda == Rational(1, 4));
    CHECK(*p.delta == Rational(1, 4));
    CHECK(p.jordan_type);
    CHECK(p.spaces.s00.dim() == 1);
    CHECK(p.spaces.sLD.dim() == 1);
    // A_{0,0} = span(b + c - (1/4) a), A_{1/4,1/4} = span(b - c)
    CHECK(p.spaces.s00.contains(el({Rational(-1, 4), Rational(1), Rational(1)})));
    CHECK(p.spaces.sLD.contains(el({Rational(0), Rational(1), Rational(-1)})));
}

TEST_CASE("classify_axis flags the matrix-unit idempotent as non-primitive")
{
    AlgebraTable mu = matrix_unit_algebra();
    AxisProfile p = classify_axis(mu, mu.basis_element(0)); // e11
    CHECK(p.idempotent);
    CHECK(p.left_axis);
    CHECK(!p.lambda); // min poly t(t-1), lambda absent
    CHECK(p.minpoly_left
          == Polynomial::monomial_t() * Polynomial::linear_root(Rational(1)));
    CHECK(!p.primitive_left); // dim A_1(L) = 2
    CHECK(!p.primitive_two_sided());
    CHECK(p.failure.find("dim A_1(L) = 2") != std::string::npos);
}

TEST_CASE("classify_axis carries failures instead of throwing")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile nonidem = classify_axis(m3, vec_scale(Rational(1, 2), m3.basis_element(0)));
    CHECK(!nonidem.idempotent);
    CHECK(nonidem.failure == "not idempotent");

    AxisProfile zero = classify_axis(m3, m3.zero_element());
    CHECK(zero.idempotent);
    CHECK(!zero.primitive_two_sided());

    // Unit of the matrix algebra: idempotent, min poly t - 1, but A_1 is
    // everything, so not primitive.
    AlgebraTable mu = matrix_unit_algebra();
    Element unit = vec_add(mu.basis_element(0), mu.basis_element(3));
    AxisProfile punit = classify_axis(mu, unit);
    CHECK(punit.idempotent);
    CHECK(punit.left_axis);
    CHECK(!punit.lambda);
    CHECK(!punit.primitive_left);
}

TEST_CASE("for primitive axes A_{1,1} is one-dimensional and mixed unit spaces vanish")
{
    AlgebraTable m6 = matsuo_algebra(sym4_transposition_space(), Rational(1, 2));
    for (std::size_t i = 0; i < m6.dim(); ++i) {
        Element a = m6.basis_element(i);
        AxisProfile p = classify_axis(m6, a);
        REQUIRE(p.primitive_two_sided());
        CHECK(p.spaces.s11 == Subspace::span(6, {a}));
        REQUIRE(p.lambda);
        CHECK(two_sided_eigenspace(m6, a, Rational(1), *p.delta).dim() == 0);
        CHECK(two_sided_eigenspace(m6, a, *p.lambda, Rational(1)).dim() == 0);
    }
}

TEST_CASE("classify_axis is stable under a change of basis")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    oracle::Rng rng(2718);
    const std::size_t n = 3;
    for (int it = 0; it < 8; ++it) {
        Matrix p = rng.matrix(n, n);
        auto p_inv = inverse(p);
        if (!p_inv)
            continue;
        // Transported table: products of the new basis vectors, re-expressed.
        AlgebraTable moved(n, {"u", "v", "w"});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Element pi(n), pj(n);
                for (std::size_t k = 0; k < n; ++k) {
                    pi[k] = p.at(k, i);
                    pj[k] = p.at(k, j);
                }
                moved.set_product(i, j, p_inv->apply(multiply(m3, pi, pj)));
            }
        Element a_moved = p_inv->apply(m3.basis_element(0));
        AxisProfile orig = classify_axis(m3, m3.basis_element(0));
        AxisProfile moved_p = classify_axis(moved, a_moved);
        REQUIRE(moved_p.primitive_two_sided());
        CHECK(moved_p.lambda == orig.lambda);
        CHECK(moved_p.delta == orig.delta);
        CHECK(moved_p.jordan_type == orig.jordan_type);
        CHECK(moved_p.spaces.s00.dim() == orig.spaces.s00.dim());
        CHECK(moved_p.spaces.sLD.dim() == orig.spaces.sLD.dim());
        // Spaces transport through the basis map.
        std::vector<RatVec> mapped;
        for (const auto& row : orig.spaces.sLD.basis_list())
            mapped.push_back(p_inv->apply(row));
        CHECK(moved_p.spaces.sLD == Subspace::span(n, mapped));
    }
}

TEST_CASE("a primitive axis with a nonzero off-diagonal space is not jordan")
{
    // a idempotent, a*u = (1/5)u, u*a = 0, u*u = 0: A_{1/5,0}(a) = span(u),
    // delta absent (right min poly t(t-1)). Primitive two-sided, not jordan.
    AlgebraTable t(2, {"a", "u"});
    t.set_gamma(0, 0, 0, Rational(1));
    t.set_gamma(0, 1, 1, Rational(1, 5));
    AxisProfile p = classify_axis(t, t.basis_element(0));
    REQUIRE(p.primitive_two_sided());
    REQUIRE(p.lambda);
    CHECK(*p.lambda == Rational(1, 5));
    CHECK(!p.delta);
    CHECK(p.spaces.sL0.dim() == 1);
    CHECK(!p.jordan_type);
    // Both routes to the jordan flag agree: the span route misses u.
    Subspace jordan_sum =
        Subspace::span(2, {p.axis}).sum(p.spaces.s00).sum(p.spaces.sLD);
    CHECK(jordan_sum.dim() < 2);
}

TEST_CASE("decompose: dim-2 frozen values and reconstruction")
{
    AlgebraTable t = dim2_algebra(Rational(1, 3));
    AxisProfile pa = classify_axis(t, t.basis_element(0));
    Element b = t.basis_element(1);

    TwoSidedDecomposition d = decompose(pa, b);
    CHECK(d.alpha == 1);
    CHECK(vec_is_zero(d.comp_00));
    CHECK(vec_is_zero(d.comp_L0));
    CHECK(vec_is_zero(d.comp_0D));
    CHECK(d.comp_LD == el({Rational(-1), Rational(1)})); // b - a

    TwoSidedDecomposition da = decompose(pa, pa.axis);
    CHECK(da.alpha == 1);
    CHECK(vec_is_zero(da.comp_00));
    CHECK(vec_is_zero(da.comp_LD));
}

TEST_CASE("decompose: matsuo values frozen from the eigenprojection oracle")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile pa = classify_axis(m3, m3.basis_element(0));
    Element b = m3.basis_element(1);
    TwoSidedDecomposition d = decompose(pa, b);

    // alpha_b = eta/4 = 1/8; c = (b + c - a/4)/2; z = (b - c)/2
    CHECK(d.alpha == Rational(1, 8));
    CHECK(d.comp_00 == el({Rational(-1, 8), Rational(1, 2), Rational(1, 2)}));
    CHECK(vec_is_zero(d.comp_L0));
    CHECK(vec_is_zero(d.comp_0D));
    CHECK(d.comp_LD == el({Rational(0), Rational(1, 2), Rational(-1, 2)}));

    // Same numbers from the independent projection oracle.
    CHECK(d.comp_00 == oracle_component(pa, b, 0));
    CHECK(d.comp_LD == oracle_component(pa, b, 3));
    CHECK(vec_scale(d.alpha, pa.axis) == oracle_component(pa, b, -1));
}

TEST_CASE("decompose reconstructs and components live in their spaces")
{
    AlgebraTable m6 = matsuo_algebra(sym4_transposition_space(), Rational(2, 5));
    AxisProfile pa = classify_axis(m6, m6.basis_element(2));
    REQUIRE(pa.primitive_two_sided());
    oracle::Rng rng(4096);
    for (int it = 0; it < 12; ++it) {
        Element v = rng.vec(6);
        TwoSidedDecomposition d = decompose(pa, v);
        Element rebuilt = vec_scale(d.alpha, pa.axis);
        rebuilt = vec_add(rebuilt, d.comp_00);
        rebuilt = vec_add(rebuilt, d.comp_L0);
        rebuilt = vec_add(rebuilt, d.comp_0D);
        rebuilt = vec_add(rebuilt, d.comp_LD);
        CHECK(rebuilt == v);

        // Exact eigen-membership of each component.
        const Element& a = pa.axis;
        CHECK(multiply(m6, a, d.comp_00) == m6.zero_element());
        CHECK(multiply(m6, d.comp_00, a) == m6.zero_element());
        CHECK(multiply(m6, a, d.comp_LD) == vec_scale(*pa.lambda, d.comp_LD));
        CHECK(multiply(m6, d.comp_LD, a) == vec_scale(*pa.delta, d.comp_LD));
        CHECK(vec_is_zero(d.comp_L0));
        CHECK(vec_is_zero(d.comp_0D));
    }

    AlgebraTable mu = matrix_unit_algebra();
    AxisProfile bad = classify_axis(mu, mu.basis_element(0));
    CHECK_THROWS_AS(decompose(bad, mu.basis_element(1)), input_error);
}

TEST_CASE("check_fusion passes on corpus axes and flags corrupted tables")
{
    AlgebraTable t = dim2_algebra(Rational(1, 3));
    AxisProfile pa = classify_axis(t, t.basis_element(0));
    CHECK(check_fusion(t, pa).entries.empty());

    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile pm = classify_axis(m3, m3.basis_element(0));
    CHECK(check_fusion(m3, pm).entries.empty());

    // Perturb one structure constant; either classification breaks or at
    // least one graded product escapes its part.
    AlgebraTable bad = m3.perturbed(1, 2, 0);
    AxisProfile pbad = classify_axis(bad, bad.basis_element(0));
    if (pbad.primitive_two_sided()) {
        VerificationReport r = check_fusion(bad, pbad);
        CHECK(!r.entries.empty());
        for (const auto& e : r.entries)
            CHECK(!vec_is_zero(e.residual));
    }
}

TEST_CASE("build_frame on the dim-2 algebra")
{
    AlgebraTable t = dim2_algebra(Rational(1, 3));
    TwoGeneratedFrame f = build_frame(t, t.basis_element(0), t.basis_element(1));
    CHECK(f.alpha_b == 1);
    CHECK(f.beta_a == 1);
    CHECK(f.z == el({Rational(-1), Rational(1)}));       // b - a
    CHECK(f.z_prime == el({Rational(1), Rational(-1)})); // a - b
    CHECK(vec_is_zero(f.c));
    CHECK(vec_is_zero(f.x));
    CHECK(vec_is_zero(f.y));
    CHECK(vec_is_zero(f.c_prime));
    CHECK(f.closure.dim() == 2);

    CHECK_THROWS_AS(build_frame(t, t.basis_element(0), t.basis_element(0)), input_error);
}

TEST_CASE("build_frame spans the closure on matsuo algebras")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    TwoGeneratedFrame f = build_frame(m3, m3.basis_element(0), m3.basis_element(1));
    CHECK(f.closure.dim() == 3);
    CHECK(!vec_is_zero(f.c));
    CHECK(!vec_is_zero(f.z));
    CHECK(vec_is_zero(f.x));
    CHECK(vec_is_zero(f.y));
    CHECK(f.lambda == Rational(1, 4));
    CHECK(f.delta_p == Rational(1, 4));

    // Non-collinear generators in the six-point algebra: b sits entirely in
    // A_{0,0}(a), the closure is two-dimensional.
    AlgebraTable m6 = matsuo_algebra(sym4_transposition_space(), Rational(1, 2));
    TwoGeneratedFrame g = build_frame(m6, m6.basis_element(0), m6.basis_element(5));
    CHECK(g.alpha_b == 0);
    CHECK(g.c == m6.basis_element(5));
    CHECK(g.closure.dim() == 2);

    AlgebraTable mu = matrix_unit_algebra();
    CHECK_THROWS_AS(build_frame(mu, mu.basis_element(0), mu.basis_element(3)), input_error);
}

TEST_CASE("find_idempotents and find_axes")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    auto axes = find_axes(m3);
    CHECK(axes.size() == 3);

    AlgebraTable m6 = matsuo_algebra(sym4_transposition_space(), Rational(1, 2));
    auto idem6 = find_idempotents(m6);
    // Points, plus sums of non-collinear point pairs and similar composites.
    CHECK(idem6.size() > 6);
    CHECK(find_axes(m6).size() == 6);

    AlgebraTable mu = matrix_unit_algebra();
    auto idem = find_idempotents(mu);
    CHECK(std::find(idem.begin(), idem.end(), mu.basis_element(0)) != idem.end());
    CHECK(find_axes(mu).empty());
}
